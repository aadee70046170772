#include "harmonia/curve.hpp"


namespace harmonia {

namespace {

HPoint2 other_point_on(const HLine2& l, const HPoint2& avoid) {
  static const std::array<std::array<long, 3>, 5> kCuts{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}}};
  for (const auto& c : kCuts) {
    auto cut = HLine2::from_ints(c, l.field());
    if (cut == l) continue;
    auto p = meet(l, cut);
    if (!(p == avoid)) return p;
  }
  fail(ErrorCode::DegenerateConfiguration, "no second point on " + l.to_string());
}

// Coefficient rows over (m00, m01, m02, m11, m12, m22).
std::vector<Scalar> bilinear_row(const Vec<3>& u, const Vec<3>& v) {
  return {u[0] * v[0],        u[0] * v[1] + u[1] * v[0], u[0] * v[2] + u[2] * v[0],
          u[1] * v[1],        u[1] * v[2] + u[2] * v[1], u[2] * v[2]};
}

Mat<3> symmetric_from(const std::vector<Scalar>& k) {
  return {{{k[0], k[1], k[2]}, {k[1], k[3], k[4]}, {k[2], k[4], k[5]}}};
}

template <std::size_t N>
std::array<Scalar, N * N> flatten(const Mat<N>& m) {
  std::array<Scalar, N * N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i * N + j] = m[i][j];
  return out;
}

void check_tangent_data(const HPoint2& a_pt, const HLine2& a, const HPoint2& b_pt, const HLine2& b,
                        const HPoint2& c_pt) {
  require_odd_characteristic(a_pt.field());
  if (a_pt == b_pt || a == b || !incident(a_pt, a) || !incident(b_pt, b))
    fail(ErrorCode::DegenerateTangentData, "need A on a, B on b with A != B and a != b");
  auto q = join(a_pt, b_pt);
  if (incident(meet(a, b), q)) fail(ErrorCode::DegenerateTangentData, "a ∧ b lies on A∨B");
  if (incident(c_pt, q) || incident(c_pt, a) || incident(c_pt, b))
    fail(ErrorCode::DegenerateTangentData, "C lies on A∨B, a or b");
}

}  // namespace

ConicMatrix::ConicMatrix(const Mat<3>& m) : m_(m) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(m_[i][j] == m_[j][i])) fail(ErrorCode::DegeneratePointSet, "conic matrix is not symmetric");
  if (rank(m_) != 3) fail(ErrorCode::DegeneratePointSet, "degenerate conic");
  auto flat = flatten(m_);
  canonicalize(flat);
  for (std::size_t i = 0; i < 9; ++i) m_[i / 3][i % 3] = flat[i];
}

Scalar ConicMatrix::value(const HPoint2& z) const { return dot(z.coords(), mul(m_, z.coords())); }

HLine2 ConicMatrix::polar(const HPoint2& p) const { return HLine2(mul(m_, p.coords())); }

HPoint2 ConicMatrix::pole(const HLine2& l) const { return HPoint2(mul(adjugate(m_), l.coords())); }

HPoint2 ConicMatrix::second_intersection(const HLine2& l, const HPoint2& z) const {
  if (!contains(z) || !incident(z, l)) fail(ErrorCode::NotOnCurve, z.to_string() + " is not on the conic and line");
  auto w = other_point_on(l, z);
  Scalar ww = value(w);
  if (ww.is_zero()) return w;
  Scalar zw = dot(z.coords(), mul(m_, w.coords()));
  Scalar s = -(zw + zw) / ww;
  if (s.is_zero()) return z;
  return HPoint2(combine(Scalar::one(field()), z.coords(), s, w.coords()));
}

bool ConicMatrix::invariant_under(const Collineation2& t) const {
  const auto& r = t.matrix();
  auto image = flatten(mul(transpose(r), mul(m_, r)));
  canonicalize(image);
  return image == flatten(m_);
}

ConicMatrix conic_fit(const std::array<HPoint2, 5>& pts) {
  Field f = pts[0].field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : pts) rows.push_back(bilinear_row(p.coords(), p.coords()));
  auto ns = nullspace(rows, 6, f);
  if (ns.size() != 1) fail(ErrorCode::DegeneratePointSet, "points do not determine a unique conic");
  return ConicMatrix(symmetric_from(ns[0]));
}

HLine2 vertex_tangent(const Quadrangle& q, int v) {
  const auto& at = q.vertex(v);
  return harmonic_fourth(join(at, q.vertex(v + 3)), join(at, q.vertex(v + 2)), join(at, q.vertex(v + 1)));
}

static std::array<HLine2, 4> vertex_tangents(const Quadrangle& q) {
  return {vertex_tangent(q, 0), vertex_tangent(q, 1), vertex_tangent(q, 2), vertex_tangent(q, 3)};
}

// Four vertices plus tangency to a at A: Eᵀ M A = 0 for E on a.
static ConicMatrix conic_through(const Quadrangle& q, const HLine2& a) {
  Field f = q.a().field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& v : q.vertices()) rows.push_back(bilinear_row(v.coords(), v.coords()));
  rows.push_back(bilinear_row(other_point_on(a, q.a()).coords(), q.a().coords()));
  auto ns = nullspace(rows, 6, f);
  if (ns.size() != 1) fail(ErrorCode::DegenerateConfiguration, "tangent data does not fix a conic");
  return ConicMatrix(symmetric_from(ns[0]));
}

HarmonicCurve inscribed_square(Field f) {
  auto pt = [f](long x, long y) { return HPoint2::from_ints({x, y, 1}, f); };
  return HarmonicCurve(Quadrangle(pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)));
}

HarmonicCurve::HarmonicCurve(Quadrangle generator) : HarmonicCurve(generator, vertex_tangents(generator)) {}

HarmonicCurve::HarmonicCurve(Quadrangle generator, std::array<HLine2, 4> tangents)
    : gen_(std::move(generator)),
      tangents_(std::move(tangents)),
      pole_q_(meet(tangents_[0], tangents_[2])),
      q_(join(gen_.a(), gen_.b())),
      conic_(conic_through(gen_, tangents_[0])) {}

HarmonicCurve HarmonicCurve::from_a_construction(const HPoint2& a_pt, const HLine2& a, const HPoint2& b_pt,
                                                 const HLine2& b, const HPoint2& c_pt) {
  check_tangent_data(a_pt, a, b_pt, b, c_pt);
  auto d_pt = apply(harmonic_reflection(meet(a, b), join(a_pt, b_pt)), c_pt);
  HarmonicCurve curve(Quadrangle(a_pt, c_pt, b_pt, d_pt));
  if (!(curve.tangents_[0] == a) || !(curve.tangents_[2] == b))
    fail(ErrorCode::DegenerateTangentData, "tangents disagree with the generated quadrangle");
  return curve;
}

HarmonicCurve HarmonicCurve::from_conic(const ConicMatrix& m, const HPoint2& a, const HPoint2& b, const HPoint2& c) {
  for (const auto* p : {&a, &b, &c})
    if (!m.contains(*p)) fail(ErrorCode::NotOnCurve, p->to_string() + " is not on the conic");
  if (a == b || b == c || a == c) fail(ErrorCode::CoincidentPoints, "need three distinct points");
  return from_a_construction(a, m.polar(a), b, m.polar(b), c);
}

HPoint2 HarmonicCurve::hc_point(const HPoint2& x) const {
  if (!incident(x, q_)) fail(ErrorCode::ArgumentOffLine, x.to_string() + " is not on A∨B");
  if (x == gen_.a() || x == gen_.b()) return x;
  auto y = harmonic_fourth(gen_.a(), x, gen_.b());
  return meet(join(gen_.c(), x), join(gen_.d(), y));
}

HPoint2 HarmonicCurve::parameter_of(const HPoint2& z) const {
  if (z == gen_.a() || z == gen_.b()) return z;
  if (z == gen_.c()) return harmonic_fourth(gen_.a(), meet(q_, join(gen_.c(), gen_.d())), gen_.b());
  return meet(q_, join(gen_.c(), z));
}

bool HarmonicCurve::contains(const HPoint2& z) const {
  for (const auto& v : gen_.vertices())
    if (v == z) return true;
  std::array<HLine2, 4> pencil{join(z, gen_.a()), join(z, gen_.c()), join(z, gen_.b()), join(z, gen_.d())};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (pencil[i] == pencil[j]) return false;
  return is_harmonic_pencil(pencil[0], pencil[1], pencil[2], pencil[3]);
}

HLine2 HarmonicCurve::tangent_at(const HPoint2& z) const {
  if (!contains(z)) fail(ErrorCode::NotOnCurve, z.to_string() + " is not on the curve");
  for (std::size_t i = 0; i < 4; ++i)
    if (gen_.vertices()[i] == z) return tangents_[i];
  auto x = meet(q_, join(gen_.c(), z));
  auto y = harmonic_fourth(gen_.a(), x, gen_.b());
  return apply(harmonic_reflection(x, join(y, pole_q_)), tangents_[1]);
}

bool HarmonicCurve::polar_reflection_invariance(const HPoint2& p, std::size_t samples) const {
  if (conic_.contains(p)) fail(ErrorCode::PoleOnCurve, p.to_string() + " is on the curve");
  auto rho = harmonic_reflection(p, conic_.polar(p));
  for (const auto& z : sample(samples)) {
    auto w = apply(rho, z);
    if (!contains(w) || !conic_.contains(w)) return false;
  }
  return true;
}

HPoint2 HarmonicCurve::tangential_map(const HPoint2& t, const HPoint2& x) const {
  if (!contains(t)) fail(ErrorCode::NotOnCurve, t.to_string() + " is not on the curve");
  if (!contains(x)) fail(ErrorCode::NotOnCurve, x.to_string() + " is not on the curve");
  if (t == x) return t;
  return meet(tangent_at(t), tangent_at(x));
}

HPoint2 HarmonicCurve::tangential_inverse(const HPoint2& t, const HPoint2& x_prime) const {
  auto tl = tangent_at(t);
  if (!incident(x_prime, tl)) fail(ErrorCode::ArgumentOffLine, x_prime.to_string() + " is not on the tangent");
  if (x_prime == t) return t;
  return conic_.second_intersection(conic_.polar(x_prime), t);
}

Collineation2 HarmonicCurve::hyperbolic_reflection(const HPoint2& a, const HPoint2& b) const {
  if (a == b) fail(ErrorCode::CoincidentPoints, "hyperbolic line needs two points");
  if (!contains(a) || !contains(b)) fail(ErrorCode::NotOnCurve, "hyperbolic line endpoints must be on the curve");
  auto line = join(a, b);
  return harmonic_reflection(conic_.pole(line), line);
}

bool HarmonicCurve::interior(const HPoint2& z) const {
  if (!field().is_rational()) fail(ErrorCode::Unsupported, "interior is only defined over Q");
  Scalar v = conic_.value(z);
  if (det(conic_.matrix()).sign() > 0) v = -v;
  return v.sign() < 0;
}

std::vector<HPoint2> HarmonicCurve::sample(std::size_t count) const {
  std::vector<HPoint2> out;
  auto push = [&](const HPoint2& p) {
    if (out.size() >= count) return;
    for (const auto& o : out)
      if (o == p) return;
    out.push_back(p);
  };
  for (const auto& v : gen_.vertices()) push(v);
  for (const auto& x : ladder_points(gen_.a(), gen_.b(), count + 8)) push(hc_point(x));
  return out;
}

HPoint2 a_construction_point(const HPoint2& a_pt, const HLine2& a, const HPoint2& b_pt, const HLine2& b,
                             const HPoint2& c_pt, const HPoint2& x) {
  check_tangent_data(a_pt, a, b_pt, b, c_pt);
  if (!incident(x, join(a_pt, b_pt)) || x == a_pt || x == b_pt)
    fail(ErrorCode::ArgumentOffLine, x.to_string() + " must lie on A∨B away from A and B");
  auto y = harmonic_fourth(a_pt, x, b_pt);
  return apply(harmonic_reflection(x, join(y, meet(a, b))), c_pt);
}

}  // namespace harmonia
