#include "harmonia/harmonic.hpp"

#include <vector>

namespace harmonia {

namespace {

// x ∨ y for points and x ∧ y for lines are both the cross product; one
// overload set lets the harmonic fourth run verbatim on either side.
HLine2 span(const HPoint2& x, const HPoint2& y) { return join(x, y); }
HPoint2 span(const HLine2& x, const HLine2& y) { return meet(x, y); }

bool on(const HPoint2& p, const HLine2& l) { return incident(p, l); }
bool on(const HLine2& l, const HPoint2& p) { return incident(p, l); }

template <class E>
E fourth(const E& a, const E& c, const E& b, const E& p, const E& r) {
  require_odd_characteristic(a.field());
  if (a == b) fail(ErrorCode::CoincidentBase, "harmonic fourth with A = B");
  auto base = span(a, b);
  if (!on(c, base)) fail(ErrorCode::NotCollinear, "C is not on A∨B");
  if (p == r || on(p, base) || on(r, base) || !on(c, span(p, r)))
    fail(ErrorCode::DegenerateAuxiliaries, "auxiliaries must be distinct, off A∨B and collinear with C");
  try {
    // Quadrangle p, s, r, t with diagonal points a and b.
    auto s = span(span(a, p), span(b, r));
    auto t = span(span(b, p), span(a, r));
    return span(span(s, t), base);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CoincidentArguments) throw;
    fail(ErrorCode::DegenerateAuxiliaries, e.what());
  }
}

template <class E>
E fourth_canonical(const E& a, const E& c, const E& b) {
  require_odd_characteristic(a.field());
  if (a == b) fail(ErrorCode::CoincidentBase, "harmonic fourth with A = B");
  Field f = a.field();
  auto base = span(a, b);
  if (!on(c, base)) fail(ErrorCode::NotCollinear, "C is not on A∨B");
  static const std::array<std::array<long, 3>, 7> kReference{
      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 2, 3}, {1, -1, 2}, {2, 3, -1}}};
  for (const auto& ref : kReference) {
    E p = E::from_ints(ref, f);
    if (on(p, base)) continue;
    for (long k : {1, 2, -1}) {
      try {
        E r(combine(Scalar::one(f), p.coords(), Scalar(f, k), c.coords()));
        return fourth(a, c, b, p, r);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateAuxiliaries && e.code() != ErrorCode::ZeroVector) throw;
      }
    }
  }
  fail(ErrorCode::DegenerateAuxiliaries, "no auxiliary pair found");
}

}  // namespace

void require_odd_characteristic(Field f) {
  if (f.characteristic() == 2) fail(ErrorCode::CharacteristicTwo, "harmonic constructions need characteristic != 2");
}

Quadrangle::Quadrangle(HPoint2 a, HPoint2 c, HPoint2 b, HPoint2 d) : v_{std::move(a), std::move(c), std::move(b), std::move(d)} {
  if (!in_general_position(std::span<const HPoint2>(v_)))
    fail(ErrorCode::NotAQuadrangle, "three of the vertices are collinear");
}

std::array<HLine2, 4> Quadrangle::sides() const {
  return {join(v_[0], v_[1]), join(v_[1], v_[2]), join(v_[2], v_[3]), join(v_[3], v_[0])};
}

std::array<HLine2, 2> Quadrangle::diagonals() const { return {join(v_[0], v_[2]), join(v_[1], v_[3])}; }

HPoint2 Quadrangle::center() const {
  auto d = diagonals();
  return meet(d[0], d[1]);
}

std::array<HPoint2, 2> Quadrangle::diagonal_points() const {
  auto s = sides();
  return {meet(s[0], s[2]), meet(s[1], s[3])};
}

HLine2 Quadrangle::horizon() const {
  auto p = diagonal_points();
  return join(p[0], p[1]);
}

HPoint2 harmonic_fourth(const HPoint2& a, const HPoint2& c, const HPoint2& b, const HPoint2& aux1,
                        const HPoint2& aux2) {
  return fourth(a, c, b, aux1, aux2);
}

HPoint2 harmonic_fourth(const HPoint2& a, const HPoint2& c, const HPoint2& b) { return fourth_canonical(a, c, b); }

HLine2 harmonic_fourth(const HLine2& a, const HLine2& c, const HLine2& b) { return fourth_canonical(a, c, b); }

std::optional<Scalar> cross_ratio(const HPoint2& a, const HPoint2& b, const HPoint2& c, const HPoint2& d) {
  return cross_ratio_vectors<3>(a.coords(), b.coords(), c.coords(), d.coords());
}

std::optional<Scalar> cross_ratio(const HPoint3& a, const HPoint3& b, const HPoint3& c, const HPoint3& d) {
  return cross_ratio_vectors<4>(a.coords(), b.coords(), c.coords(), d.coords());
}

bool is_harmonic_set(const HPoint2& a, const HPoint2& c, const HPoint2& b, const HPoint2& d) {
  if (a == b) fail(ErrorCode::CoincidentBase, "harmonic set with A = B");
  auto base = join(a, b);
  if (!incident(c, base) || !incident(d, base)) fail(ErrorCode::NotCollinear, "harmonic set must be collinear");
  return harmonic_fourth(a, c, b) == d;
}

bool is_harmonic_pencil(const HLine2& a, const HLine2& c, const HLine2& b, const HLine2& d) {
  if (a == b) fail(ErrorCode::CoincidentBase, "harmonic pencil with a = b");
  auto center = meet(a, b);
  if (!incident(center, c) || !incident(center, d)) fail(ErrorCode::NotConcurrent, "pencil must be concurrent");
  Field f = a.field();
  static const std::array<std::array<long, 3>, 5> kCuts{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 2, 3}}};
  for (const auto& ref : kCuts) {
    auto cut = HLine2::from_ints(ref, f);
    if (incident(center, cut)) continue;
    return is_harmonic_set(meet(a, cut), meet(c, cut), meet(b, cut), meet(d, cut));
  }
  fail(ErrorCode::DegenerateAuxiliaries, "no section line found");
}

HPoint3 harmonic_conjugate(const HPoint3& a, const HPoint3& b, const HPoint3& c) {
  return HPoint3(harmonic_conjugate_vector<4>(a.coords(), b.coords(), c.coords()));
}

LineReflection::LineReflection(HPoint2 a, HPoint2 b) : a_(std::move(a)), b_(std::move(b)), line_(HLine2::from_ints({0, 0, 1}, a_.field())) {
  if (a_ == b_) fail(ErrorCode::CoincidentBase, "reflection with A = B");
  line_ = join(a_, b_);
}

HPoint2 LineReflection::operator()(const HPoint2& x) const {
  if (!incident(x, line_)) fail(ErrorCode::ArgumentOffLine, x.to_string() + " is not on " + line_.to_string());
  return harmonic_fourth(a_, x, b_);
}

template <std::size_t N>
static Mat<N> reflection_matrix(const Vec<N>& c, const Vec<N>& m) {
  Field f = c[0].field();
  require_odd_characteristic(f);
  Scalar mc = dot(m, c);
  if (mc.is_zero()) fail(ErrorCode::IncidentCenterMirror, "center lies on the mirror");
  // (m·c) I - 2 c mᵀ
  Mat<N> t;
  Scalar two(f, 2);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) t[i][j] = (i == j ? mc : Scalar::zero(f)) - two * c[i] * m[j];
  return t;
}

Collineation2 harmonic_reflection(const HPoint2& center, const HLine2& mirror) {
  return Collineation2(reflection_matrix<3>(center.coords(), mirror.coords()));
}

Collineation3 harmonic_reflection(const HPoint3& center, const HPlane3& mirror) {
  return Collineation3(reflection_matrix<4>(center.coords(), mirror.coords()));
}

std::array<Collineation2, 4> klein_triangle(const HPoint2& a_pt, const HLine2& a_side, const HPoint2& b_pt,
                                            const HLine2& b_side, const HPoint2& c_pt, const HLine2& c_side) {
  if (collinear(a_pt, b_pt, c_pt)) fail(ErrorCode::NotATriangle, "vertices are collinear");
  if (!(join(b_pt, c_pt) == a_side) || !(join(c_pt, a_pt) == b_side) || !(join(a_pt, b_pt) == c_side))
    fail(ErrorCode::NotATriangle, "sides are not opposite to the vertices");
  return {Collineation2::identity(a_pt.field()), harmonic_reflection(a_pt, a_side), harmonic_reflection(b_pt, b_side),
          harmonic_reflection(c_pt, c_side)};
}

}  // namespace harmonia
