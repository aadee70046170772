#include "doctest.h"

#include "harmonia/curve.hpp"
#include "test_util.hpp"

using namespace test;

namespace {

HarmonicCurve square() {
  return HarmonicCurve(Quadrangle(P2({1, 0, 1}), P2({0, 1, 1}), P2({-1, 0, 1}), P2({0, -1, 1})));
}

bool on_unit_circle(const HPoint2& p) {
  const auto& c = p.coords();
  return (c[0] * c[0] + c[1] * c[1] - c[2] * c[2]).is_zero();
}

// Brute force: harmonic in dihedral order A, C, B, D from Z means
// (ZA, ZB; ZC, ZD) = -1, computed on a section line.
bool brute_member(const Quadrangle& q, const HPoint2& z) {
  for (const auto& v : q.vertices())
    if (v == z) return true;
  HLine2 cut = L2({1, 2, 7}, z.field());
  for (const auto& c : {std::array<long, 3>{1, 2, 7}, {3, -1, 5}, {1, 0, 0}, {0, 1, 0}, {2, 5, 1}}) {
    cut = L2(c, z.field());
    if (!incident(z, cut)) break;
  }
  std::array<HPoint2, 4> s{meet(join(z, q.a()), cut), meet(join(z, q.b()), cut), meet(join(z, q.c()), cut),
                           meet(join(z, q.d()), cut)};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (s[i] == s[j]) return false;
  auto cr = cross_ratio(s[0], s[1], s[2], s[3]);
  return cr && *cr == Scalar(z.field(), -1);
}

Mat<3> diag3(long a, long b, long c) {
  Mat<3> m = identity_mat<3>(Field::rational());
  m[0][0] = Q(a);
  m[1][1] = Q(b);
  m[2][2] = Q(c);
  return m;
}

HarmonicCurve random_curve(Gen& g) {
  for (;;) {
    auto v = g.quadrangle();
    try {
      return HarmonicCurve(Quadrangle(v[0], v[1], v[2], v[3]));
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("inscribed square") {
  auto hc = square();
  const auto& q = hc.generator();
  CHECK(vertex_tangent(q, 0) == L2({1, 0, -1}));
  CHECK(vertex_tangent(q, 2) == L2({1, 0, 1}));
  CHECK(vertex_tangent(q, 1) == L2({0, 1, -1}));
  CHECK(hc.pole_q() == P2({0, 1, 0}));
  CHECK(hc.conic() == ConicMatrix(diag3(1, 1, -1)));

  CHECK(hc.hc_point(P2({2, 0, 1})) == P2({4, 3, 5}));
  CHECK(hc.hc_point(q.a()) == q.a());
  CHECK(hc.hc_point(q.b()) == q.b());
  CHECK(hc.parameter_of(q.c()) != q.c());
  CHECK(hc.hc_point(hc.parameter_of(q.c())) == q.c());
  CHECK(hc.hc_point(hc.parameter_of(q.d())) == q.d());
  CHECK_THROWS_AS(hc.hc_point(P2({0, 1, 1})), Error);

  CHECK(hc.contains(P2({4, 3, 5})));
  CHECK_FALSE(hc.contains(P2({0, 0, 1})));
  CHECK(hc.contains(q.a()));
  CHECK_FALSE(brute_member(q, P2({0, 0, 1})));

  CHECK(hc.tangent_at(P2({0, 1, 1})) == L2({0, 1, -1}));
  CHECK(hc.tangent_at(P2({4, 3, 5})) == L2({4, 3, -5}));
  CHECK(hc.tangent_at(q.a()) == hc.tangents()[0]);
  CHECK_THROWS_AS(hc.tangent_at(P2({0, 0, 1})), Error);

  for (const auto& z : hc.sample(40)) {
    CHECK(on_unit_circle(z));
    CHECK(hc.contains(z));
  }
}

TEST_CASE("A-construction") {
  auto a = P2({1, 0, 1}), b = P2({-1, 0, 1}), c = P2({0, 1, 1});
  auto ta = L2({1, 0, -1}), tb = L2({1, 0, 1});
  CHECK(a_construction_point(a, ta, b, tb, c, P2({2, 0, 1})) == P2({4, 3, 5}));
  CHECK(a_construction_point(a, ta, b, tb, c, P2({0, 0, 1})) == P2({0, -1, 1}));
  CHECK_THROWS_AS(a_construction_point(a, ta, b, tb, c, a), Error);
  CHECK_THROWS_AS(a_construction_point(a, ta, b, tb, c, P2({0, 1, 0})), Error);
  CHECK_THROWS_AS(a_construction_point(a, ta, b, ta, c, P2({2, 0, 1})), Error);
  CHECK_THROWS_AS(a_construction_point(a, L2({0, 1, 0}), b, L2({0, 1, 0}), c, P2({2, 0, 1})), Error);

  auto hc = HarmonicCurve::from_a_construction(a, ta, b, tb, c);
  CHECK(hc.generator().d() == P2({0, -1, 1}));

  for (Field f : {Field::rational(), Field::prime(11)}) {
    Gen g(3, f);
    for (int i = 0; i < 25; ++i) {
      auto curve = random_curve(g);
      const auto& gq = curve.generator();
      auto& t = curve.tangents();
      // generating condition D = C·ρ(Q, q)
      CHECK(apply(harmonic_reflection(curve.pole_q(), curve.q()), gq.c()) == gq.d());
      for (int k = 0; k < 8; ++k) {
        auto x = g.point_on(curve.q());
        if (x == gq.a() || x == gq.b()) continue;
        CHECK(a_construction_point(gq.a(), t[0], gq.b(), t[2], gq.c(), x) == curve.hc_point(x));
      }
    }
  }
}

TEST_CASE("membership agrees with brute force and the conic") {
  for (Field f : {Field::rational(), Field::prime(7), Field::prime(13)}) {
    Gen g(17, f);
    for (int i = 0; i < 20; ++i) {
      auto curve = random_curve(g);
      for (int k = 0; k < 10; ++k) {
        auto x = g.point_on(curve.q());
        auto z = curve.hc_point(x);
        CHECK(curve.contains(z));
        CHECK(curve.conic().contains(z));
        CHECK(brute_member(curve.generator(), z));
        CHECK(curve.hc_point(curve.parameter_of(z)) == z);
        auto tz = curve.tangent_at(z);
        CHECK(incident(z, tz));
        CHECK(tz == curve.polar_of_point(z));
        auto w = g.point2();
        CHECK(curve.contains(w) == brute_member(curve.generator(), w));
        CHECK(curve.contains(w) == curve.conic().contains(w));
      }
    }
  }
}

TEST_CASE("conic fit") {
  std::array<HPoint2, 5> pts{P2({1, 0, 1}), P2({-1, 0, 1}), P2({0, 1, 1}), P2({0, -1, 1}), P2({4, 3, 5})};
  CHECK(conic_fit(pts) == ConicMatrix(diag3(1, 1, -1)));
  std::array<HPoint2, 5> bad{P2({0, 0, 1}), P2({1, 0, 1}), P2({2, 0, 1}), P2({3, 0, 1}), P2({0, 1, 1})};
  CHECK_THROWS_AS(conic_fit(bad), Error);
  std::array<HPoint2, 5> pair{P2({0, 0, 1}), P2({1, 0, 1}), P2({2, 0, 1}), P2({0, 1, 1}), P2({0, 2, 1})};
  CHECK_THROWS_AS(conic_fit(pair), Error);

  Gen g(41);
  for (int i = 0; i < 10; ++i) {
    auto curve = random_curve(g);
    auto s = curve.sample(25);
    REQUIRE(s.size() == 25);
    auto fit = conic_fit({s[5], s[7], s[11], s[13], s[17]});
    CHECK(fit == curve.conic());
    for (const auto& z : s) CHECK(fit.contains(z));
  }
}

TEST_CASE("finite curves have p + 1 points") {
  for (long p : {3, 5, 7}) {
    Field f = Field::prime(p);
    Gen g(p, f);
    auto curve = random_curve(g);
    auto s = curve.sample(1000);
    CHECK(s.size() == static_cast<std::size_t>(p + 1));
    long count = 0;
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y)
        if (curve.contains(P2({x, y, 1}, f))) ++count;
    for (long x = 0; x < p; ++x)
      if (curve.contains(P2({x, 1, 0}, f))) ++count;
    if (curve.contains(P2({1, 0, 0}, f))) ++count;
    CHECK(count == p + 1);
  }
}

TEST_CASE("polarity") {
  auto hc = square();
  CHECK(hc.polar_of_point(P2({2, 0, 1})) == L2({2, 0, -1}));
  auto t = hc.polar_of_point(P2({1, 0, 1}));
  CHECK(t == L2({1, 0, -1}));
  CHECK(incident(P2({1, 0, 1}), t));
  CHECK(hc.polar_reflection_invariance(P2({0, 0, 1})));
  CHECK(hc.polar_reflection_invariance(P2({2, 0, 1})));
  CHECK(hc.conic().invariant_under(harmonic_reflection(P2({2, 0, 1}), hc.polar_of_point(P2({2, 0, 1})))));
  CHECK_THROWS_AS(hc.polar_reflection_invariance(P2({1, 0, 1})), Error);

  Gen g(43);
  for (int i = 0; i < 10; ++i) {
    auto curve = random_curve(g);
    for (int k = 0; k < 10; ++k) {
      auto p = g.point2();
      CHECK(curve.pole_of_line(curve.polar_of_point(p)) == p);
      bool on = curve.contains(p);
      CHECK(on == incident(p, curve.polar_of_point(p)));
      if (!on) CHECK(curve.polar_reflection_invariance(p, 8));
      // conjugate points: P on polar(R) iff R on polar(P)
      auto r = g.point2();
      CHECK(incident(p, curve.polar_of_point(r)) == incident(r, curve.polar_of_point(p)));
    }
  }
}

TEST_CASE("point and tangent duality through the Klein triangle") {
  Gen g(47);
  for (int i = 0; i < 10; ++i) {
    auto curve = random_curve(g);
    const auto& gq = curve.generator();
    for (int k = 0; k < 10; ++k) {
      auto x = g.point_on(curve.q());
      if (x == gq.a() || x == gq.b()) continue;
      auto y = harmonic_fourth(gq.a(), x, gq.b());
      const auto& qp = curve.pole_q();
      auto rho_x = harmonic_reflection(x, join(y, qp));
      auto rho_y = harmonic_reflection(y, join(x, qp));
      auto rho_q = harmonic_reflection(qp, curve.q());
      CHECK(rho_x == rho_q.then(rho_y));
      auto z = apply(rho_x, gq.c());
      auto zl = apply(rho_x, curve.tangents()[1]);
      CHECK(incident(z, zl));
      CHECK(zl == curve.tangent_at(z));
    }
  }
}

TEST_CASE("projection invariance and reconstruction from a conic") {
  Gen g(53);
  for (int i = 0; i < 10; ++i) {
    auto curve = random_curve(g);
    auto t = g.collineation2();
    const auto& gq = curve.generator();
    HarmonicCurve image(Quadrangle(apply(t, gq.a()), apply(t, gq.c()), apply(t, gq.b()), apply(t, gq.d())));
    for (int k = 0; k < 5; ++k) {
      auto x = g.point_on(curve.q());
      CHECK(image.hc_point(apply(t, x)) == apply(t, curve.hc_point(x)));
    }
    auto s = curve.sample(12);
    auto rebuilt = HarmonicCurve::from_conic(curve.conic(), s[4], s[6], s[9]);
    for (const auto& z : s) CHECK(rebuilt.contains(z));
    CHECK(rebuilt.conic() == curve.conic());
  }
}

TEST_CASE("tangential map and hyperbolic reflections") {
  auto hc = square();
  auto top = P2({0, 1, 1});
  CHECK(hc.tangential_map(top, P2({1, 0, 1})) == P2({1, 1, 1}));
  CHECK(hc.tangential_map(top, top) == top);
  const auto& q = hc.generator();
  CHECK(is_harmonic_set(hc.tangential_map(top, q.a()), hc.tangential_map(top, q.c()), hc.tangential_map(top, q.b()),
                        hc.tangential_map(top, q.d())));
  CHECK_THROWS_AS(hc.tangential_map(top, P2({0, 0, 1})), Error);

  auto eta = hc.hyperbolic_reflection(P2({1, 0, 1}), P2({-1, 0, 1}));
  Mat<3> flip = diag3(1, -1, 1);
  CHECK(eta == Collineation2(flip));
  CHECK(eta.then(eta).is_identity());
  CHECK_THROWS_AS(hc.hyperbolic_reflection(top, top), Error);

  Gen g(59);
  for (int i = 0; i < 6; ++i) {
    auto curve = random_curve(g);
    auto s = curve.sample(20);
    const auto& tp = s[4];
    auto tl = curve.tangent_at(tp);
    for (const auto& x : s) CHECK(curve.tangential_inverse(tp, curve.tangential_map(tp, x)) == x);
    // generator-level correspondence: η(A,B) transported to t fixes A', B'
    // and acts as the harmonic reflection of t with respect to them
    const auto& a = s[5];
    const auto& b = s[6];
    auto e = curve.hyperbolic_reflection(a, b);
    CHECK(curve.conic().invariant_under(e));
    CHECK(apply(e, a) == a);
    auto ap = curve.tangential_map(tp, a), bp = curve.tangential_map(tp, b);
    auto rho = harmonic_reflection_on_line(ap, bp);
    CHECK(rho.line() == tl);
    for (std::size_t k = 7; k < s.size(); ++k) {
      auto ex = apply(e, s[k]);
      CHECK(curve.contains(ex));
      if (s[k] == tp || ex == tp) continue;
      CHECK(rho(curve.tangential_map(tp, s[k])) == curve.tangential_map(tp, ex));
    }
  }
}

TEST_CASE("interior over Q") {
  auto hc = square();
  CHECK(hc.interior(P2({0, 0, 1})));
  CHECK(hc.interior(P2({1, 1, 3})));
  CHECK_FALSE(hc.interior(P2({2, 0, 1})));
  CHECK_FALSE(hc.interior(P2({1, 0, 1})));
  Field f = Field::prime(7);
  HarmonicCurve finite(Quadrangle(P2({1, 0, 1}, f), P2({0, 1, 1}, f), P2({6, 0, 1}, f), P2({0, 6, 1}, f)));
  CHECK_THROWS_AS(finite.interior(P2({0, 0, 1}, f)), Error);
}

TEST_CASE("inscribed square over prime fields") {
  for (std::uint32_t p : {7u, 11u, 13u}) {
    CAPTURE(p);
    auto hc = inscribed_square(Field::prime(p));
    auto smp = hc.sample(p + 1);
    CHECK(smp.size() == p + 1);
    for (const auto& z : smp) CHECK((z[0] * z[0] + z[1] * z[1] - z[2] * z[2]).is_zero());
  }
  CHECK(inscribed_square().conic() == conic_fit({P2({1, 0, 1}), P2({0, 1, 1}), P2({-1, 0, 1}), P2({0, -1, 1}),
                                                 P2({3, 4, 5})}));
}
