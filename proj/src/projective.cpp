#include "harmonia/projective.hpp"

#include <algorithm>
#include <numeric>

namespace harmonia {

namespace {

// Index pairs of the Plücker coordinates.
constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Entry (i, j) of the antisymmetric matrix of a 6-vector.
Scalar antisym(const Vec<6>& p, int i, int j) {
  if (i == j) return Scalar::zero(p[0].field());
  bool flip = i > j;
  if (flip) std::swap(i, j);
  for (std::size_t k = 0; k < 6; ++k)
    if (kPairs[k].first == i && kPairs[k].second == j) return flip ? -p[k] : p[k];
  return Scalar::zero(p[0].field());
}

// Hodge dual: primal <-> dual Plücker coordinates.
Vec<6> hodge(const Vec<6>& p) { return {p[5], -p[4], p[3], p[2], -p[1], p[0]}; }

Vec<6> wedge(const Vec<4>& x, const Vec<4>& y) {
  Vec<6> p;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    p[k] = x[i] * y[j] - x[j] * y[i];
  }
  return p;
}

// Contract the antisymmetric matrix of p with a 4-vector.
Vec<4> contract(const Vec<6>& p, const Vec<4>& v) {
  Vec<4> r;
  for (int i = 0; i < 4; ++i) {
    Scalar s = Scalar::zero(v[0].field());
    for (int j = 0; j < 4; ++j) s += antisym(p, i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Vec<4> basis4(Field f, int k) {
  Vec<4> v = zero_vec<4>(f);
  v[k] = Scalar::one(f);
  return v;
}

}  // namespace

void PluckerTag::validate(const Vec<6>& p) {
  Scalar rel = p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
  if (!rel.is_zero()) fail(ErrorCode::NotPlucker, "Grassmann-Plücker relation violated");
}

HPoint2 affine_point(const Scalar& x, const Scalar& y) { return HPoint2({x, y, Scalar::one(x.field())}); }

HPoint3 affine_point(const Scalar& x, const Scalar& y, const Scalar& z) {
  return HPoint3({x, y, z, Scalar::one(x.field())});
}

HLine2 affine_line(const Scalar& a, const Scalar& b, const Scalar& c) { return HLine2({a, b, c}); }

bool incident(const HPoint2& p, const HLine2& l) { return dot(p.coords(), l.coords()).is_zero(); }

HLine2 join(const HPoint2& p, const HPoint2& q) {
  auto v = cross(p.coords(), q.coords());
  if (is_zero(v)) fail(ErrorCode::CoincidentArguments, "join of equal points " + p.to_string());
  return HLine2(v);
}

HPoint2 meet(const HLine2& l, const HLine2& m) {
  auto v = cross(l.coords(), m.coords());
  if (is_zero(v)) fail(ErrorCode::CoincidentArguments, "meet of equal lines " + l.to_string());
  return HPoint2(v);
}

bool collinear(const HPoint2& a, const HPoint2& b, const HPoint2& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

bool concurrent(const HLine2& a, const HLine2& b, const HLine2& c) {
  return det3(a.coords(), b.coords(), c.coords()).is_zero();
}

template <class T>
static bool no_three_dependent(std::span<const T> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      for (std::size_t k = j + 1; k < xs.size(); ++k)
        if (det3(xs[i].coords(), xs[j].coords(), xs[k].coords()).is_zero()) return false;
  return true;
}

bool in_general_position(std::span<const HPoint2> pts) { return no_three_dependent(pts); }
bool in_general_position(std::span<const HLine2> lines) { return no_three_dependent(lines); }

bool incident(const HPoint3& p, const HPlane3& pi) { return dot(p.coords(), pi.coords()).is_zero(); }

bool incident(const HPoint3& p, const PluckerLine& l) { return is_zero(contract(hodge(l.coords()), p.coords())); }

bool incident(const PluckerLine& l, const HPlane3& pi) { return is_zero(contract(l.coords(), pi.coords())); }

PluckerLine join(const HPoint3& p, const HPoint3& q) {
  auto v = wedge(p.coords(), q.coords());
  if (is_zero(v)) fail(ErrorCode::DegenerateSpan, "join of equal points " + p.to_string());
  return PluckerLine(v);
}

HPoint3 meet(const PluckerLine& l, const HPlane3& pi) {
  auto v = contract(l.coords(), pi.coords());
  if (is_zero(v)) fail(ErrorCode::LineInPlane, l.to_string() + " lies in " + pi.to_string());
  return HPoint3(v);
}

HPlane3 join(const PluckerLine& l, const HPoint3& p) {
  auto v = contract(hodge(l.coords()), p.coords());
  if (is_zero(v)) fail(ErrorCode::PointOnLine, p.to_string() + " lies on " + l.to_string());
  return HPlane3(v);
}

PluckerLine meet(const HPlane3& a, const HPlane3& b) {
  auto v = wedge(a.coords(), b.coords());
  if (is_zero(v)) fail(ErrorCode::CoincidentArguments, "meet of equal planes " + a.to_string());
  return PluckerLine(hodge(v));
}

HPlane3 join(const HPoint3& a, const HPoint3& b, const HPoint3& c) {
  auto v = cross4(a.coords(), b.coords(), c.coords());
  if (is_zero(v)) fail(ErrorCode::DegenerateSpan, "collinear points span no plane");
  return HPlane3(v);
}

HPoint3 meet(const HPlane3& a, const HPlane3& b, const HPlane3& c) {
  auto v = cross4(a.coords(), b.coords(), c.coords());
  if (is_zero(v)) fail(ErrorCode::DegenerateSpan, "planes share a line");
  return HPoint3(v);
}

Scalar plucker_pairing(const PluckerLine& l, const PluckerLine& m) {
  const auto& p = l.coords();
  const auto& q = m.coords();
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
}

bool lines_coplanar(const PluckerLine& l, const PluckerLine& m) { return plucker_pairing(l, m).is_zero(); }

HPoint3 meet(const PluckerLine& l, const PluckerLine& m) {
  if (l == m) fail(ErrorCode::CoincidentLines, "meet of a line with itself");
  if (!lines_coplanar(l, m)) fail(ErrorCode::NotCoplanar, "skew lines do not meet");
  Field f = l.field();
  // A plane through l that does not contain m cuts m in the common point.
  for (int k = 0; k < 4; ++k) {
    auto plane = contract(hodge(l.coords()), basis4(f, k));
    if (is_zero(plane)) continue;
    auto x = contract(m.coords(), plane);
    if (!is_zero(x)) return HPoint3(x);
  }
  fail(ErrorCode::DegenerateSpan, "no separating plane found");
}

HPlane3 join(const PluckerLine& l, const PluckerLine& m) {
  if (l == m) fail(ErrorCode::CoincidentLines, "join of a line with itself");
  if (!lines_coplanar(l, m)) fail(ErrorCode::NotCoplanar, "skew lines span no plane");
  auto [u, v] = points_on(m);
  return incident(u, l) ? join(l, v) : join(l, u);
}

std::pair<HPoint3, HPoint3> points_on(const PluckerLine& l) {
  Field f = l.field();
  std::vector<HPoint3> found;
  for (int k = 0; k < 4 && found.size() < 2; ++k) {
    auto x = contract(l.coords(), basis4(f, k));
    if (is_zero(x)) continue;
    HPoint3 p(x);
    if (found.empty() || !(found.front() == p)) found.push_back(p);
  }
  return {found.at(0), found.at(1)};
}

HPoint3 point_on(const PluckerLine& l, const std::optional<Scalar>& t) {
  auto [u, v] = points_on(l);
  if (!t) return v;
  return HPoint3(combine(Scalar::one(l.field()), u.coords(), *t, v.coords()));
}

bool in_general_position(std::span<const PluckerLine> lines) {
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (lines_coplanar(lines[i], lines[j])) return false;
  return true;
}

template <std::size_t N>
Collineation<N>::Collineation(Mat<N> m) : m_(std::move(m)) {
  if (det(m_).is_zero()) fail(ErrorCode::SingularMatrix, "collineation matrix is singular");
  std::vector<Scalar> flat;
  for (auto& row : m_)
    for (auto& x : row) flat.push_back(x);
  canonicalize(flat);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m_[i][j] = flat[i * N + j];
}

template <std::size_t N>
std::string Collineation<N>::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < N; ++j) {
      if (j) s += ' ';
      s += m_[i][j].to_string();
    }
  }
  return s + "]";
}

template class Collineation<3>;
template class Collineation<4>;

HPoint2 apply(const Collineation2& t, const HPoint2& p) { return HPoint2(mul(t.matrix(), p.coords())); }

HLine2 apply(const Collineation2& t, const HLine2& l) {
  return HLine2(mul(transpose(adjugate(t.matrix())), l.coords()));
}

HPoint3 apply(const Collineation3& t, const HPoint3& p) { return HPoint3(mul(t.matrix(), p.coords())); }

HPlane3 apply(const Collineation3& t, const HPlane3& pi) {
  return HPlane3(mul(transpose(adjugate(t.matrix())), pi.coords()));
}

PluckerLine apply(const Collineation3& t, const PluckerLine& l) {
  const auto& m = t.matrix();
  Vec<6> out;
  for (std::size_t a = 0; a < 6; ++a) {
    auto [i, j] = kPairs[a];
    Scalar s = Scalar::zero(l.field());
    for (std::size_t b = 0; b < 6; ++b) {
      auto [k, q] = kPairs[b];
      s += (m[i][k] * m[j][q] - m[i][q] * m[j][k]) * l[b];
    }
    out[a] = s;
  }
  return PluckerLine(out);
}

std::vector<Scalar> parameter_ladder(Field f, std::size_t count) {
  std::vector<Scalar> out;
  if (!f.is_rational()) {
    for (long t = 0; t < f.modulus() && out.size() < count; ++t) out.emplace_back(f, t);
    return out;
  }
  auto push = [&](long n, long d) {
    if (out.size() < count) out.emplace_back(f, n, d);
    if (out.size() < count) out.emplace_back(f, -n, d);
  };
  out.emplace_back(Scalar::zero(f));
  for (long h = 1; out.size() < count; ++h) {
    push(h, 1);
    if (h == 1) continue;
    push(1, h);
    for (long k = 2; k < h; ++k) {
      if (std::gcd(k, h) != 1) continue;
      push(h, k);
      push(k, h);
    }
  }
  out.resize(std::min(out.size(), count));
  return out;
}

}  // namespace harmonia
