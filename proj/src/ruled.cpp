#include "harmonia/ruled.hpp"

#include <algorithm>

namespace harmonia {

namespace {

template <std::size_t N>
std::array<Scalar, N * N> flatten(const Mat<N>& m) {
  std::array<Scalar, N * N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i * N + j] = m[i][j];
  return out;
}

HPlane3 plane_of(const std::array<Vec<4>, 3>& cols) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& c : cols) rows.emplace_back(c.begin(), c.end());
  if (matrix_rank(rows, 4) != 3) fail(ErrorCode::DegenerateConfiguration, "chart columns are dependent");
  return HPlane3(cross4(cols[0], cols[1], cols[2]));
}

template <std::size_t N>
std::array<Vec<N>, N - 1> hyperplane_basis(const Vec<N>& h) {
  auto ns = nullspace({{h.begin(), h.end()}}, N, h[0].field());
  std::array<Vec<N>, N - 1> out;
  for (std::size_t i = 0; i + 1 < N; ++i) std::copy(ns[i].begin(), ns[i].end(), out[i].begin());
  return out;
}

bool pairwise_skew(const std::array<PluckerLine, 3>& ls) { return in_general_position(std::span<const PluckerLine>(ls)); }

bool meet_properly(const PluckerLine& l, const PluckerLine& m) { return !(l == m) && lines_coplanar(l, m); }

const std::array<std::array<long, 4>, 8> kSpaceReference{{{0, 0, 1, 0},
                                                          {1, 0, 0, 0},
                                                          {0, 1, 0, 0},
                                                          {0, 0, 0, 1},
                                                          {1, 1, 1, 1},
                                                          {1, 2, 3, 4},
                                                          {1, -1, 2, 3},
                                                          {2, 1, -1, 1}}};

std::vector<HPoint3> points_off(const HPlane3& pi) {
  std::vector<HPoint3> out;
  for (const auto& r : kSpaceReference) {
    auto p = HPoint3::from_ints(r, pi.field());
    if (!incident(p, pi)) out.push_back(p);
  }
  return out;
}

std::array<HPoint2, 3> pappus_points(const std::array<HPoint2, 3>& a, const std::array<HPoint2, 3>& b) {
  auto p = [&](int j, int k) { return meet(join(a[j], b[k]), join(a[k], b[j])); };
  return {p(1, 2), p(0, 2), p(0, 1)};
}

}  // namespace

// ---- charts ----------------------------------------------------------------

PlaneChart::PlaneChart(const std::array<Vec<4>, 3>& columns) : cols_(columns), plane_(plane_of(columns)) {}

PlaneChart PlaneChart::z0(Field f) {
  return PlaneChart({int_vec<4>(f, {1, 0, 0, 0}), int_vec<4>(f, {0, 1, 0, 0}), int_vec<4>(f, {0, 0, 0, 1})});
}

PlaneChart PlaneChart::for_plane(const HPlane3& pi) { return PlaneChart(hyperplane_basis<4>(pi.coords())); }

HPoint3 PlaneChart::point(const HPoint2& p) const {
  Vec<4> v = zero_vec<4>(field());
  for (std::size_t i = 0; i < 3; ++i) v = combine(Scalar::one(field()), v, p[i], cols_[i]);
  return HPoint3(v);
}

PluckerLine PlaneChart::line(const HLine2& l) const {
  auto basis = hyperplane_basis<3>(l.coords());
  return join(point(HPoint2(basis[0])), point(HPoint2(basis[1])));
}

HPoint2 PlaneChart::pull(const HPoint3& p) const {
  if (!incident(p, plane_)) fail(ErrorCode::ArgumentOffLine, p.to_string() + " is not in the chart plane");
  // Solve E x = p on three independent rows of E.
  for (std::size_t skip = 0; skip < 4; ++skip) {
    Mat<3> sub;
    Vec<3> rhs;
    for (std::size_t r = 0, k = 0; r < 4; ++r) {
      if (r == skip) continue;
      for (std::size_t c = 0; c < 3; ++c) sub[k][c] = cols_[c][r];
      rhs[k++] = p[r];
    }
    if (det(sub).is_zero()) continue;
    return HPoint2(mul(adjugate(sub), rhs));
  }
  fail(ErrorCode::DegenerateConfiguration, "chart has no invertible minor");
}

HLine2 PlaneChart::pull(const PluckerLine& l) const {
  if (!incident(l, plane_)) fail(ErrorCode::ArgumentOffLine, l.to_string() + " is not in the chart plane");
  auto [u, v] = points_on(l);
  return join(pull(u), pull(v));
}

// ---- quadric oracle --------------------------------------------------------

QuadricMatrix::QuadricMatrix(const Mat<4>& m) : m_(m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(m_[i][j] == m_[j][i])) fail(ErrorCode::DegeneratePointSet, "quadric matrix is not symmetric");
  auto flat = flatten(m_);
  canonicalize(flat);
  for (std::size_t i = 0; i < 16; ++i) m_[i / 4][i % 4] = flat[i];
}

std::size_t QuadricMatrix::rank() const { return harmonia::rank(m_); }

Scalar QuadricMatrix::value(const HPoint3& p) const { return dot(p.coords(), mul(m_, p.coords())); }

HPlane3 QuadricMatrix::polar(const HPoint3& p) const { return HPlane3(mul(m_, p.coords())); }

HPoint3 QuadricMatrix::pole(const HPlane3& pi) const { return HPoint3(mul(adjugate(m_), pi.coords())); }

bool QuadricMatrix::is_tangent(const HPlane3& pi) const {
  return dot(pi.coords(), mul(adjugate(m_), pi.coords())).is_zero();
}

bool QuadricMatrix::invariant_under(const Collineation3& t) const {
  const auto& r = t.matrix();
  auto image = flatten(mul(transpose(r), mul(m_, r)));
  canonicalize(image);
  return image == flatten(m_);
}

Mat<3> QuadricMatrix::restrict_to(const PlaneChart& chart) const {
  const auto& e = chart.columns();
  Mat<3> out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = dot(e[i], mul(m_, e[j]));
  return out;
}

QuadricMatrix quadric_fit(const std::array<HPoint3, 9>& pts) {
  Field f = pts[0].field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& p : pts) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) row.push_back(i == j ? p[i] * p[i] : (p[i] * p[j]) + (p[i] * p[j]));
    rows.push_back(std::move(row));
  }
  auto ns = nullspace(rows, 10, f);
  if (ns.size() != 1) fail(ErrorCode::DegeneratePointSet, "points do not determine a unique quadric");
  Mat<4> m;
  for (std::size_t i = 0, k = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j, ++k) m[i][j] = m[j][i] = ns[0][k];
  return QuadricMatrix(m);
}

// ---- rulings ---------------------------------------------------------------

PluckerLine transversal_through_point(const HPoint3& x, const PluckerLine& a, const PluckerLine& b) {
  if (lines_coplanar(a, b)) fail(ErrorCode::CoplanarGenerators, "generators must be skew");
  if (incident(x, a) || incident(x, b)) fail(ErrorCode::PointOnGenerator, x.to_string() + " lies on a generator");
  return meet(join(a, x), join(b, x));
}

Ruling::Ruling(std::array<PluckerLine, 3> generators) : gens_(std::move(generators)) {
  if (!pairwise_skew(gens_)) fail(ErrorCode::CoplanarGenerators, "generators must be pairwise skew");
}

PluckerLine Ruling::rule_from_plane(const HPlane3& alpha) const {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!incident(gens_[i], alpha)) continue;
    return join(meet(gens_[(i + 1) % 3], alpha), meet(gens_[(i + 2) % 3], alpha));
  }
  fail(ErrorCode::PlaneNotThroughGenerator, alpha.to_string() + " contains no generator");
}

PluckerLine Ruling::rule_through_point(const HPoint3& p) const {
  for (std::size_t i = 0; i < 3; ++i)
    if (incident(p, gens_[i])) return transversal_through_point(p, gens_[(i + 1) % 3], gens_[(i + 2) % 3]);
  fail(ErrorCode::PointNotOnGenerator, p.to_string() + " is on no generator");
}

PluckerLine Ruling::rule_through_surface_point(const HPoint3& p) const {
  for (const auto& g : gens_)
    if (incident(p, g)) return rule_through_point(p);
  auto t = transversal_through_point(p, gens_[0], gens_[1]);
  if (!lines_coplanar(t, gens_[2])) fail(ErrorCode::PointNotOnSurface, p.to_string() + " is not on the surface");
  return t;
}

bool Ruling::is_rule(const PluckerLine& l) const {
  for (const auto& g : gens_)
    if (!meet_properly(l, g)) return false;
  return true;
}

std::vector<PluckerLine> Ruling::sample_rules(std::size_t count) const {
  auto [u, v] = points_on(gens_[0]);
  std::vector<PluckerLine> out;
  for (const auto& p : ladder_points(u, v, count)) out.push_back(rule_through_point(p));
  return out;
}

// ---- Dandelin configurations -----------------------------------------------

DandelinConfiguration::DandelinConfiguration(std::array<PluckerLine, 3> red, std::array<PluckerLine, 3> blue)
    : red_(std::move(red)), blue_(std::move(blue)) {
  if (!valid()) fail(ErrorCode::DegenerateConfiguration, "lines do not form a Dandelin configuration");
}

DandelinConfiguration::DandelinConfiguration(std::array<PluckerLine, 3> red, std::array<PluckerLine, 3> blue,
                                             Unchecked)
    : red_(std::move(red)), blue_(std::move(blue)) {}

DandelinConfiguration DandelinConfiguration::unchecked(std::array<PluckerLine, 3> red,
                                                       std::array<PluckerLine, 3> blue) {
  return DandelinConfiguration(std::move(red), std::move(blue), Unchecked{});
}

bool DandelinConfiguration::valid() const {
  if (!pairwise_skew(red_) || !pairwise_skew(blue_)) return false;
  for (const auto& r : red_)
    for (const auto& b : blue_)
      if (!meet_properly(r, b)) return false;
  return true;
}

HPoint3 DandelinConfiguration::basic_point(int i, int j) const { return meet(red_[i], blue_[j]); }

HPlane3 DandelinConfiguration::tangent_plane(int i, int j) const { return join(red_[i], blue_[j]); }

// ---- surfaces --------------------------------------------------------------

static QuadricMatrix quadric_of(const DandelinConfiguration& d) {
  std::array<HPoint3, 9> pts{d.basic_point(0, 0), d.basic_point(0, 1), d.basic_point(0, 2),
                             d.basic_point(1, 0), d.basic_point(1, 1), d.basic_point(1, 2),
                             d.basic_point(2, 0), d.basic_point(2, 1), d.basic_point(2, 2)};
  auto q = quadric_fit(pts);
  if (q.rank() != 4) fail(ErrorCode::DegenerateConfiguration, "surface quadric is degenerate");
  return q;
}

RuledSurface::RuledSurface(std::array<PluckerLine, 3> red, std::array<PluckerLine, 3> blue)
    : red_(std::move(red)), blue_(std::move(blue)), quadric_(quadric_of(DandelinConfiguration(red_, blue_))) {}

RuledSurface RuledSurface::from_ruling(const Ruling& r) {
  auto rules = r.sample_rules(3);
  return RuledSurface(r.generators(), {rules[0], rules[1], rules[2]});
}

std::vector<PluckerLine> RuledSurface::red_rules(std::size_t count) const { return Ruling(blue_).sample_rules(count); }

std::vector<PluckerLine> RuledSurface::blue_rules(std::size_t count) const { return Ruling(red_).sample_rules(count); }

std::vector<HPoint3> RuledSurface::sample_points(std::size_t count) const {
  std::size_t side = 2;
  while (side * side < count) ++side;
  std::vector<HPoint3> out;
  for (const auto& rule : red_rules(side)) {
    auto [u, v] = points_on(rule);
    for (const auto& p : ladder_points(u, v, side)) {
      if (out.size() == count) return out;
      bool seen = false;
      for (const auto& o : out) seen = seen || o == p;
      if (!seen) out.push_back(p);
    }
  }
  return out;
}

bool RuledSurface::contains(const HPoint3& p) const {
  for (const auto& g : red_)
    if (incident(p, g)) return true;
  return lines_coplanar(transversal_through_point(p, red_[0], red_[1]), red_[2]);
}

PluckerLine RuledSurface::red_rule_through(const HPoint3& z) const { return Ruling(blue_).rule_through_surface_point(z); }

PluckerLine RuledSurface::blue_rule_through(const HPoint3& z) const { return Ruling(red_).rule_through_surface_point(z); }

HPlane3 RuledSurface::tangent_plane_at(const HPoint3& z) const { return join(red_rule_through(z), blue_rule_through(z)); }

HPlane3 RuledSurface::polar_plane(const HPoint3& p) const {
  if (contains(p)) fail(ErrorCode::PointOnSurface, p.to_string() + " is on the surface");
  Ruling blue_family(red_);
  std::array<HPoint3, 3> contact{p, p, p};
  for (std::size_t i = 0; i < 3; ++i) contact[i] = meet(red_[i], blue_family.rule_from_plane(join(red_[i], p)));
  try {
    return join(contact[0], contact[1], contact[2]);
  } catch (const Error&) {
    fail(ErrorCode::DegenerateConfiguration, "contact points are collinear");
  }
}

HPoint3 RuledSurface::pole_of_plane(const HPlane3& pi) const {
  if (is_tangent(pi)) fail(ErrorCode::TangentPlane, pi.to_string() + " is tangent to the surface");
  std::vector<HPlane3> planes;
  for (const auto& g : red_) {
    if (incident(g, pi)) fail(ErrorCode::TangentPlane, pi.to_string() + " contains a rule");
    planes.push_back(tangent_plane_at(meet(g, pi)));
  }
  try {
    return meet(planes[0], planes[1], planes[2]);
  } catch (const Error&) {
    fail(ErrorCode::TangentPlane, "tangent planes do not meet in a point");
  }
}

RuledSurface saddle_surface(Field f) {
  auto p = [f](long a, long b, long c, long d) { return HPoint3::from_ints({a, b, c, d}, f); };
  auto red = [&](long k) { return join(p(k, 0, 0, 1), p(0, 1, k, 0)); };
  auto blue = [&](long k) { return join(p(0, k, 0, 1), p(1, 0, k, 0)); };
  return RuledSurface({red(0), red(1), red(2)}, {blue(0), blue(1), blue(2)});
}

DandelinConfiguration dandelin_from_surface(const RuledSurface& s, const HPoint3& p) {
  if (s.contains(p)) fail(ErrorCode::PointOnSurface, p.to_string() + " is on the surface");
  Ruling blue_family(s.red());
  std::array<PluckerLine, 3> blue = s.red();
  for (std::size_t i = 0; i < 3; ++i) blue[i] = blue_family.rule_from_plane(join(s.red()[i], p));
  return DandelinConfiguration(s.red(), blue);
}

bool harmonic_pencil_at_contact(const DandelinConfiguration& d, const HPoint3& p, const HPlane3& pi) {
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& r = d.red()[i];
    const auto& b = d.blue()[i];
    if (!meet_properly(r, b)) return false;
    auto a = meet(r, b);
    auto alpha = join(r, b);
    if (a == p || alpha == pi) fail(ErrorCode::DegenerateConfiguration, "pencil is undefined");
    if (!incident(p, alpha)) return false;
    auto trace = meet(alpha, pi);
    if (!incident(a, trace)) return false;
    auto other = [&](const PluckerLine& l) {
      auto [u, v] = points_on(l);
      return u == a ? v : u;
    };
    auto x = other(r), y = other(b);
    auto cut = join(x, y);
    auto m1 = meet(join(a, p), cut);
    auto m2 = meet(trace, cut);
    auto cr = cross_ratio(x, y, m1, m2);
    if (!cr || !(*cr == Scalar(p.field(), -1))) return false;
  }
  return true;
}

bool equipal_check(const Ruling& r, const PluckerLine& a1, const PluckerLine& b1, const PluckerLine& c1,
                   std::size_t n_samples) {
  std::array<PluckerLine, 3> opp{a1, b1, c1};
  if (!pairwise_skew(opp)) fail(ErrorCode::NotRulesOfR, "a', b', c' must be pairwise skew");
  for (const auto& g : r.generators())
    for (const auto& l : opp)
      if (!meet_properly(g, l)) return false;
  if (n_samples == 0) return true;
  auto extension = Ruling(opp).sample_rules(n_samples);
  auto rules = r.sample_rules(n_samples);
  for (const auto& x : extension)
    for (const auto& y : rules)
      if (!meet_properly(x, y)) return false;
  return true;
}

// ---- lift and section ------------------------------------------------------

Lift lift_curve_to_surface(const HarmonicCurve& curve, const PlaneChart& chart) {
  const auto& g = curve.generator();
  auto a = chart.point(g.a()), b = chart.point(g.b()), c = chart.point(g.c());
  auto q = chart.point(curve.pole_q());
  Field f = chart.field();
  static const std::array<std::pair<long, long>, 5> kSteps{{{1, 2}, {1, -1}, {2, 3}, {1, 3}, {-1, 2}}};
  for (const auto& n : points_off(chart.plane())) {
    for (auto [kp, ks] : kSteps) {
      try {
        HPoint3 p(combine(Scalar::one(f), q.coords(), Scalar(f, kp), n.coords()));
        HPoint3 s(combine(Scalar::one(f), q.coords(), Scalar(f, ks), n.coords()));
        auto s2 = harmonic_conjugate(p, q, s);
        if (s == s2 || p == s) continue;
        std::array<PluckerLine, 3> red{join(s, a), join(s2, b), join(s, a)};
        std::array<PluckerLine, 3> blue{join(s, b), join(s2, a), join(s, b)};
        red[2] = transversal_through_point(c, blue[0], blue[1]);
        blue[2] = transversal_through_point(c, red[0], red[1]);
        return Lift{RuledSurface(red, blue), p, s, s2};
      } catch (const Error& e) {
        if (e.code() == ErrorCode::CharacteristicTwo) throw;
      }
    }
  }
  fail(ErrorCode::DegenerateLiftChoice, "no admissible choice of P and S");
}

Section section(const RuledSurface& s, const PlaneChart& chart, std::size_t samples) {
  const auto& pi = chart.plane();
  if (s.is_tangent(pi)) fail(ErrorCode::TangentPlane, pi.to_string() + " is tangent to the surface");
  std::vector<HPoint3> pts;
  for (const auto& rule : s.red_rules(std::max<std::size_t>(samples, 3))) {
    if (incident(rule, pi)) fail(ErrorCode::TangentPlane, pi.to_string() + " contains a rule");
    pts.push_back(meet(rule, pi));
  }
  auto a = chart.pull(pts[0]), b = chart.pull(pts[1]), c = chart.pull(pts[2]);
  auto ta = chart.pull(meet(s.tangent_plane_at(pts[0]), pi));
  auto tb = chart.pull(meet(s.tangent_plane_at(pts[1]), pi));
  return Section{chart, HarmonicCurve::from_a_construction(a, ta, b, tb, c), pts};
}

Section section(const RuledSurface& s, const HPlane3& pi, std::size_t samples) {
  return section(s, PlaneChart::for_plane(pi), samples);
}

// ---- Pappus and Pascal -----------------------------------------------------

HexagonResult pappus_check(const HLine2& a0, const HLine2& b0, const std::array<HPoint2, 3>& b,
                           const std::array<HPoint2, 3>& a) {
  if (a0 == b0) fail(ErrorCode::DegenerateHexagon, "a0 and b0 coincide");
  auto o = meet(a0, b0);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!incident(b[i], a0) || !incident(a[i], b0)) fail(ErrorCode::DegenerateHexagon, "vertex off its line");
    if (b[i] == o || a[i] == o) fail(ErrorCode::DegenerateHexagon, "vertex at a0 ∧ b0");
    for (std::size_t j = 0; j < i; ++j)
      if (b[i] == b[j] || a[i] == a[j]) fail(ErrorCode::DegenerateHexagon, "repeated vertex");
  }
  auto p = pappus_points(a, b);
  return {p, collinear(p[0], p[1], p[2])};
}

HexagonResult pascal_check(const HarmonicCurve& curve, const std::array<HPoint2, 6>& z) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (!curve.contains(z[i])) fail(ErrorCode::NotOnCurve, z[i].to_string() + " is not on the curve");
    for (std::size_t j = 0; j < i; ++j)
      if (z[i] == z[j]) fail(ErrorCode::DegenerateHexagon, "repeated vertex");
  }
  auto side = [&](std::size_t i) { return join(z[i % 6], z[(i + 1) % 6]); };
  std::array<HPoint2, 3> p{meet(side(0), side(3)), meet(side(1), side(4)), meet(side(2), side(5))};
  return {p, collinear(p[0], p[1], p[2])};
}

PappusWitness pappus_witness(const PlaneChart& chart, const std::array<HPoint2, 3>& a,
                             const std::array<HPoint2, 3>& b) {
  if (a[0] == a[1] || b[0] == b[1]) fail(ErrorCode::DegenerateConfiguration, "a0 or b0 undefined");
  auto a0_2d = join(b[0], b[1]);
  auto b0_2d = join(a[0], a[1]);
  if (a0_2d == b0_2d || !incident(a[2], b0_2d)) fail(ErrorCode::DegenerateConfiguration, "A3 must lie on b0");
  for (const auto& p : a)
    if (incident(p, a0_2d)) fail(ErrorCode::DegenerateConfiguration, "A point on a0");
  for (const auto& p : b)
    if (incident(p, b0_2d)) fail(ErrorCode::DegenerateConfiguration, "B point on b0");

  auto lift = [&](const HPoint2& p) { return chart.point(p); };
  auto a0 = chart.line(a0_2d), b0 = chart.line(b0_2d);
  auto off = points_off(chart.plane());
  for (std::size_t i = 0; i < off.size(); ++i)
    for (std::size_t j = 0; j < off.size(); ++j) {
      if (i == j) continue;
      try {
        auto a1 = join(lift(a[0]), off[i]), a2 = join(lift(a[1]), off[j]);
        if (!pairwise_skew({a0, a1, a2})) continue;
        std::array<PluckerLine, 4> al{a0, a1, a2, a0}, bl{b0, b0, b0, b0};
        for (std::size_t k = 0; k < 3; ++k) bl[k + 1] = transversal_through_point(lift(b[k]), a1, a2);
        if (!pairwise_skew({bl[0], bl[1], bl[2]})) continue;
        al[3] = transversal_through_point(lift(a[2]), bl[1], bl[2]);
        bool ok = true;
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = 0; y < 3; ++y) ok = ok && meet_properly(al[x], bl[y]);
        if (!ok) continue;
        auto pp = pappus_points(a, b);
        return PappusWitness{chart, al, bl, pp, collinear(pp[0], pp[1], pp[2])};
      } catch (const Error&) {
      }
    }
  fail(ErrorCode::DegenerateConfiguration, "no admissible lift of a1, a2");
}

bool equipal_from_pappus_witness(const PappusWitness& w) { return meet_properly(w.a[3], w.b[3]); }

HLine2 pappus_line_from_witness(const PappusWitness& w) {
  if (!equipal_from_pappus_witness(w)) fail(ErrorCode::DegenerateConfiguration, "a3 and b3 do not meet");
  auto plane = join(meet(w.a[1], w.b[1]), meet(w.a[2], w.b[2]), meet(w.a[3], w.b[3]));
  return w.chart.pull(meet(plane, w.chart.plane()));
}

WPoint pappus_w_point(const PappusWitness& w) {
  if (!w.pappus_collinear) fail(ErrorCode::DegenerateConfiguration, "Pappus points are not collinear");
  auto p1 = w.chart.point(w.pappus_points[0]), p2 = w.chart.point(w.pappus_points[1]);
  auto x1 = meet(w.a[1], w.b[1]), x2 = meet(w.a[2], w.b[2]);
  auto delta = join(join(p1, p2), join(x1, x2));
  auto pt = meet(join(p1, x2), join(p2, x1));
  return {pt, meet(delta, join(w.a[3], w.b[1]), join(w.a[3], w.b[2])),
          meet(delta, join(w.a[1], w.b[3]), join(w.a[2], w.b[3]))};
}

}  // namespace harmonia
