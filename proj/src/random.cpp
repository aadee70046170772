#include "harmonia/random.hpp"

namespace harmonia {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rng Rng::for_instance(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ull)));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

long Rng::uniform(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

Scalar Sampler::scalar() {
  if (!field_.is_rational()) return Scalar(field_, static_cast<long>(rng_.below(field_.modulus())));
  long num = rng_.uniform(-height_, height_);
  long den = rng_.uniform(1, height_);
  return Scalar(field_, num, den);
}

Scalar Sampler::nonzero() {
  for (;;) {
    Scalar s = scalar();
    if (!s.is_zero()) return s;
  }
}

Scalar Sampler::integer() {
  if (!field_.is_rational()) return scalar();
  return Scalar(field_, rng_.uniform(-height_, height_));
}

template <std::size_t N>
static Vec<N> random_vec(Sampler& s) {
  for (;;) {
    Vec<N> v;
    for (auto& x : v) x = s.scalar();
    if (!is_zero(v)) return v;
  }
}

HPoint2 Sampler::point2() { return HPoint2(random_vec<3>(*this)); }
HLine2 Sampler::line2() { return HLine2(random_vec<3>(*this)); }
HPoint3 Sampler::point3() { return HPoint3(random_vec<4>(*this)); }
HPlane3 Sampler::plane3() { return HPlane3(random_vec<4>(*this)); }

PluckerLine Sampler::line3() {
  for (;;) {
    auto a = point3(), b = point3();
    if (!(a == b)) return join(a, b);
  }
}

Collineation2 Sampler::collineation2() {
  for (;;) {
    Mat<3> m;
    for (auto& row : m)
      for (auto& x : row) x = integer();
    if (!det(m).is_zero()) return Collineation2(m);
  }
}

Collineation3 Sampler::collineation3() {
  for (;;) {
    Mat<4> m;
    for (auto& row : m)
      for (auto& x : row) x = integer();
    if (!det(m).is_zero()) return Collineation3(m);
  }
}

HPoint2 Sampler::point_on(const HLine2& l) {
  for (;;) {
    auto p = point2();
    if (incident(p, l)) return p;
    auto q = point2();
    if (p == q) continue;
    auto m = join(p, q);
    if (m == l) return p;
    return meet(l, m);
  }
}

HPoint3 Sampler::point_on(const PluckerLine& l) {
  auto [u, v] = points_on(l);
  for (;;) {
    Scalar a = scalar(), b = scalar();
    if (a.is_zero() && b.is_zero()) continue;
    return HPoint3(combine(a, u.coords(), b, v.coords()));
  }
}

HPoint2 Sampler::point_off(const HLine2& l) {
  for (;;) {
    auto p = point2();
    if (!incident(p, l)) return p;
  }
}

HPoint3 Sampler::point_off(const HPlane3& pi) {
  for (;;) {
    auto p = point3();
    if (!incident(p, pi)) return p;
  }
}

std::array<HPoint2, 3> Sampler::collinear_triple() {
  for (;;) {
    auto a = point2(), b = point2();
    if (a == b) continue;
    auto c = point_on(join(a, b));
    if (c == a || c == b) continue;
    return {a, b, c};
  }
}

std::array<HPoint2, 4> Sampler::quadrangle() {
  for (;;) {
    std::array<HPoint2, 4> q{point2(), point2(), point2(), point2()};
    if (in_general_position(std::span<const HPoint2>(q))) return q;
  }
}

std::array<HPoint2, 3> Sampler::triangle() {
  for (;;) {
    std::array<HPoint2, 3> t{point2(), point2(), point2()};
    if (!collinear(t[0], t[1], t[2])) return t;
  }
}

std::array<PluckerLine, 3> Sampler::skew_triple() {
  for (;;) {
    std::array<PluckerLine, 3> t{line3(), line3(), line3()};
    if (in_general_position(std::span<const PluckerLine>(t))) return t;
  }
}

}  // namespace harmonia
