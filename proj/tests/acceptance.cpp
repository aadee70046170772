// Acceptance run: one line per criterion with its runtime limit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>

#include <unistd.h>

#include "harmonia/finite.hpp"
#include "harmonia/random.hpp"
#include "harmonia/ruled.hpp"

using namespace harmonia;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

template <class F>
auto redraw(F f) {
  for (int attempt = 0;; ++attempt) {
    try {
      return f();
    } catch (const Error&) {
      if (attempt == 63) throw;
    }
  }
}

Scalar q(long n, long d = 1) { return Scalar(Field::rational(), n, d); }

template <std::size_t N>
Mat<N> mat_mul(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Scalar s = a[i][0] * b[0][j];
      for (std::size_t k = 1; k < N; ++k) s = s + a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

template <std::size_t N>
Mat<N> mat_transpose(const Mat<N>& a) {
  Mat<N> t = a;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) t[i][j] = a[j][i];
  return t;
}

// a = λ b for some λ ≠ 0, by cross multiplication against a pivot entry.
template <std::size_t N>
bool proportional(const Mat<N>& a, const Mat<N>& b) {
  std::size_t pi = N, pj = N;
  for (std::size_t i = 0; i < N && pi == N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!b[i][j].is_zero()) {
        pi = i;
        pj = j;
        break;
      }
  if (pi == N || a[pi][pj].is_zero()) return false;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (!(a[i][j] * b[pi][pj] - b[i][j] * a[pi][pj]).is_zero()) return false;
  return true;
}

// C = αA + βB gives D = αA − βB.
HPoint2 conjugate_by_coefficients(const HPoint2& a, const HPoint2& b, const HPoint2& c) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      Scalar det = a[i] * b[j] - a[j] * b[i];
      if (det.is_zero()) continue;
      Scalar alpha = (c[i] * b[j] - c[j] * b[i]) / det;
      Scalar beta = (a[i] * c[j] - a[j] * c[i]) / det;
      Vec<3> d;
      for (std::size_t k = 0; k < 3; ++k) d[k] = alpha * a[k] - beta * b[k];
      return HPoint2(d);
    }
  fail(ErrorCode::CoincidentPoints, "A = B");
}

Sampler sampler(std::uint64_t criterion, std::uint64_t i) {
  return Sampler(Rng::for_instance(0xacce55ull + criterion, i), Field::rational());
}

HarmonicCurve random_curve(Sampler& s) {
  return redraw([&] {
    auto v = s.quadrangle();
    return HarmonicCurve(Quadrangle(v[0], v[1], v[2], v[3]));
  });
}

Outcome harmonic_theorem() {
  Outcome o;
  for (std::uint64_t i = 0; i < 500 && o.ok; ++i) {
    auto s = sampler(1, i);
    auto [a, b, c] = s.collinear_triple();
    auto line = join(a, b);
    std::optional<HPoint2> first;
    for (int k = 0; k < 2; ++k) {
      auto [p, r] = redraw([&] {
        auto p1 = s.point_off(line);
        auto p2 = s.point_on(join(p1, c));
        if (p2 == p1 || incident(p2, line)) fail(ErrorCode::DegenerateAuxiliaries, "redraw");
        return std::pair{p1, p2};
      });
      auto d = harmonic_fourth(a, c, b, p, r);
      if (!first) first = d;
      o.require(d == *first, "auxiliary choice changed D");
    }
    o.require(*first == conjugate_by_coefficients(a, b, c), "D differs from the coefficient oracle");
    auto cr = cross_ratio(a, b, c, *first);
    o.require(cr && *cr == q(-1), "cross ratio is not -1");
  }
  o.note = o.ok ? "500 triples, 1000 constructions" : o.note;
  return o;
}

Outcome klein() {
  Outcome o;
  for (std::uint64_t i = 0; i < 100 && o.ok; ++i) {
    auto s = sampler(2, i);
    auto [a, b, c] = s.triangle();
    auto k = klein_triangle(a, join(b, c), b, join(c, a), c, join(a, b));
    const auto id = k[0].matrix();
    for (int u = 1; u < 4; ++u) {
      o.require(proportional(mat_mul(k[u].matrix(), k[u].matrix()), id), "reflection squared is not the identity");
      for (int v = 1; v < 4; ++v)
        if (u != v) o.require(proportional(mat_mul(k[u].matrix(), k[v].matrix()), k[6 - u - v].matrix()), "group table");
    }
    auto x = redraw([&] {
      auto p = s.point2();
      if (incident(p, join(b, c)) || incident(p, join(c, a)) || incident(p, join(a, b)))
        fail(ErrorCode::PointOnLine, "redraw");
      return p;
    });
    Quadrangle orbit(x, apply(k[1], x), apply(k[2], x), apply(k[3], x));
    auto dp = orbit.diagonal_points();
    std::array<HPoint2, 3> diag{dp[0], dp[1], orbit.center()};
    for (const auto& t : {a, b, c})
      o.require(std::count(diag.begin(), diag.end(), t) == 1, "orbit has another diagonal triangle");
  }
  if (o.ok) o.note = "100 triangles";
  return o;
}

Outcome coherence() {
  Outcome o;
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 50 && o.ok; ++i) {
    auto s = sampler(3, i);
    auto curve = random_curve(s);
    const auto& g = curve.generator();
    auto smp = curve.sample(24);
    o.require(smp.size() >= 24, "too few samples");
    auto fit = conic_fit({g.a(), g.c(), g.b(), g.d(), smp[4]});
    const auto& t = curve.tangents();
    for (std::size_t k = 4; k < 24 && o.ok; ++k) {
      const auto& z = smp[k];
      o.require(curve.contains(z), "(a) membership");
      o.require(fit.contains(z), "(b) five-point fit");
      auto zt = curve.tangent_at(z);
      o.require(incident(z, zt) && fit.polar(z) == zt, "(c) Z on z");
      o.require(a_construction_point(g.a(), t[0], g.b(), t[2], g.c(), curve.parameter_of(z)) == z,
                "(d) A-construction");
      ++checked;
    }
  }
  if (o.ok) o.note = std::to_string(checked) + " samples on 50 curves";
  return o;
}

Outcome circle() {
  Outcome o;
  auto c = inscribed_square();
  auto smp = c.sample(64);
  for (const auto& z : smp) o.require((z[0] * z[0] + z[1] * z[1] - z[2] * z[2]).is_zero(), "sample off the circle");
  if (o.ok) o.note = std::to_string(smp.size()) + " samples on x² + y² = w²";
  return o;
}

Outcome polarity() {
  Outcome o;
  for (std::uint64_t i = 0; i < 30 && o.ok; ++i) {
    auto s = sampler(5, i);
    auto curve = random_curve(s);
    const auto& m = curve.conic().matrix();
    auto smp = curve.sample(8);
    for (int k = 0; k < 20 && o.ok; ++k) {
      auto p = redraw([&] {
        auto x = s.point2();
        if (curve.contains(x)) fail(ErrorCode::PoleOnCurve, "redraw");
        return x;
      });
      auto rho = harmonic_reflection(p, curve.polar_of_point(p));
      const auto& r = rho.matrix();
      o.require(proportional(mat_mul(mat_transpose(r), mat_mul(m, r)), m), "ρᵀMρ not proportional to M");
      for (const auto& z : smp) o.require(curve.contains(apply(rho, z)), "curve point leaves the curve");
      auto off = redraw([&] {
        auto x = s.point2();
        if (curve.contains(x)) fail(ErrorCode::PoleOnCurve, "redraw");
        return x;
      });
      o.require(!curve.contains(apply(rho, off)), "off-curve point lands on the curve");
    }
  }
  if (o.ok) o.note = "30 curves x 20 poles";
  return o;
}

Outcome tangential() {
  Outcome o;
  for (std::uint64_t i = 0; i < 20 && o.ok; ++i) {
    auto s = sampler(6, i);
    auto curve = random_curve(s);
    auto smp = curve.sample(30);
    const auto& tp = smp[4];
    const auto& g = curve.generator();
    auto tm = [&](const HPoint2& x) { return curve.tangential_map(tp, x); };
    o.require(is_harmonic_set(tm(g.a()), tm(g.c()), tm(g.b()), tm(g.d())), "generator image not harmonic");
    const auto& a = smp[5];
    const auto& b = smp[6];
    auto eta = curve.hyperbolic_reflection(a, b);
    auto rho = harmonic_reflection_on_line(tm(a), tm(b));
    o.require(rho(tm(a)) == tm(a) && rho(tm(b)) == tm(b), "A', B' not fixed");
    int used = 0;
    for (std::size_t k = 7; k < smp.size() && used < 20; ++k) {
      auto ex = apply(eta, smp[k]);
      if (smp[k] == tp || ex == tp) continue;
      o.require(rho(tm(smp[k])) == tm(ex), "η and ρ(A', B') disagree");
      ++used;
    }
    o.require(used == 20, "fewer than 20 samples");
  }
  if (o.ok) o.note = "20 curves x 20 samples";
  return o;
}

Outcome surfaces() {
  Outcome o;
  for (std::uint64_t i = 0; i < 20 && o.ok; ++i) {
    auto s = sampler(7, i);
    auto surf = redraw([&] { return RuledSurface::from_ruling(Ruling(s.skew_triple())); });
    auto reds = surf.red_rules(3);
    auto blues = surf.blue_rules(3);
    for (int k = 0; k < 10 && o.ok; ++k) {
      auto p = redraw([&] {
        auto x = s.point3();
        if (surf.contains(x)) fail(ErrorCode::PointOnSurface, "redraw");
        return x;
      });
      auto pi = surf.polar_plane(p);
      const auto& m = surf.quadric().matrix();
      Vec<4> polar;
      for (std::size_t r = 0; r < 4; ++r) {
        polar[r] = m[r][0] * p[0];
        for (std::size_t c = 1; c < 4; ++c) polar[r] = polar[r] + m[r][c] * p[c];
      }
      o.require(pi == HPlane3(polar), "polar plane differs from Mp");
      auto rho = harmonic_reflection(p, pi);
      auto meets_all = [&](const PluckerLine& l, const std::array<PluckerLine, 3>& family) {
        return lines_coplanar(l, family[0]) && lines_coplanar(l, family[1]) && lines_coplanar(l, family[2]);
      };
      for (const auto& l : reds) o.require(meets_all(apply(rho, l), surf.red()), "red rule stays red");
      for (const auto& l : blues) o.require(meets_all(apply(rho, l), surf.blue()), "blue rule stays blue");
      o.require(harmonic_pencil_at_contact(dandelin_from_surface(surf, p), p, pi), "contact pencil");
    }
  }
  if (o.ok) o.note = "20 surfaces x 10 points";
  return o;
}

Outcome lift_section() {
  Outcome o;
  for (std::uint64_t i = 0; i < 10 && o.ok; ++i) {
    auto s = sampler(8, i);
    auto curve = random_curve(s);
    auto chart = PlaneChart::z0();
    auto lift = lift_curve_to_surface(curve, chart);
    auto sec = section(lift.surface, chart);
    auto smp = curve.sample(20);
    o.require(smp.size() == 20, "too few samples");
    for (const auto& z : smp) {
      auto x = chart.point(z);
      o.require(lift.surface.quadric().contains(x) && lift.surface.contains(x), "curve point off the surface");
      o.require(sec.curve.contains(z), "curve point off the section");
    }
    for (const auto& z : sec.curve.sample(20)) o.require(curve.contains(z), "section point off the curve");
  }
  if (o.ok) o.note = "10 curves x 20 samples";
  return o;
}

std::array<HPoint2, 3> three_on(Sampler& s, const HLine2& l, const HPoint2& avoid) {
  return redraw([&] {
    std::array<HPoint2, 3> p{s.point_on(l), s.point_on(l), s.point_on(l)};
    if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2] || p[0] == avoid || p[1] == avoid || p[2] == avoid)
      fail(ErrorCode::CoincidentPoints, "redraw");
    return p;
  });
}

Outcome pappus() {
  Outcome o;
  int positives = 0, negatives = 0;
  for (std::uint64_t i = 0; i < 200 && o.ok; ++i) {
    auto s = sampler(9, i);
    auto [l1, l2] = redraw([&] {
      auto a = s.line2(), b = s.line2();
      if (a == b) fail(ErrorCode::CoincidentLines, "redraw");
      return std::pair{a, b};
    });
    auto o12 = meet(l1, l2);
    auto a = three_on(s, l2, o12), b = three_on(s, l1, o12);
    auto r = pappus_check(l1, l2, b, a);
    o.require(r.collinear, "Pappus points not collinear");
    o.require(incident(r.points[2], join(r.points[0], r.points[1])), "Pappus line oracle");
    if (i >= 20) continue;
    auto chart = PlaneChart::z0();
    auto w = pappus_witness(chart, a, b);
    o.require(w.pappus_collinear && equipal_from_pappus_witness(w), "constructed witness");
    ++positives;
    auto moved = b;
    auto pert = redraw([&] {
      moved[2] = s.point_off(l1);
      auto pw = pappus_witness(chart, a, moved);
      if (pw.pappus_collinear) fail(ErrorCode::DegenerateConfiguration, "redraw");
      return pw;
    });
    o.require(!equipal_from_pappus_witness(pert), "perturbed witness still meets");
    ++negatives;
  }
  for (auto [d, p] : {std::pair{2, 3u}, std::pair{2, 5u}, std::pair{3, 3u}}) {
    auto g = FiniteGeometry::enumerate(d, p);
    auto c = d == 2 ? pappus_exhaustive(g) : equipal_exhaustive(g);
    o.require(c.ok() && c.instances > 0, g.name() + " " + c.id + " " + c.detail);
  }
  if (o.ok)
    o.note = "200 hexagons, " + std::to_string(positives) + "+" + std::to_string(negatives) +
             " witnesses, PG(2,3) PG(2,5) PG(3,3) exhaustive";
  return o;
}

long gaussian(long p, int n, int k) {
  long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    long pn = 1, pk = 1;
    for (int e = 0; e < n - i; ++e) pn *= p;
    for (int e = 0; e < i + 1; ++e) pk *= p;
    num *= pn - 1;
    den *= pk - 1;
  }
  return num / den;
}

Outcome axioms() {
  Outcome o;
  for (auto [d, p] : {std::pair{2, 3u}, std::pair{2, 5u}, std::pair{3, 3u}}) {
    auto g = FiniteGeometry::enumerate(d, p);
    o.require(static_cast<long>(g.point_count()) == gaussian(p, d + 1, 1), g.name() + " point count");
    o.require(static_cast<long>(g.line_count()) == gaussian(p, d + 1, 2), g.name() + " line count");
    for (const auto& c : check_axioms(g))
      o.require(c.status == (c.id == "axiom-3" && d == 2 ? Status::not_applicable : Status::pass),
                g.name() + " " + c.id);
  }
  auto fano = FiniteGeometry::enumerate(2, 2);
  for (const auto& c : check_axioms(fano)) {
    if (c.id == "axiom-5")
      o.require(c.status == Status::fail && c.detail.find("Fano") != std::string::npos && c.witness.size() == 9,
                "PG(2,2) axiom 5 without a Fano witness");
    else
      o.require(c.status != Status::fail, "PG(2,2) fails " + c.id);
  }
  // diagonal points of the standard quadrangle over GF(2)
  Field f2 = Field::prime(2);
  Quadrangle std4(HPoint2::from_ints({1, 0, 0}, f2), HPoint2::from_ints({0, 1, 0}, f2),
                  HPoint2::from_ints({0, 0, 1}, f2), HPoint2::from_ints({1, 1, 1}, f2));
  auto dp = std4.diagonal_points();
  o.require(incident(std4.center(), join(dp[0], dp[1])), "GF(2) diagonal points not collinear");
  o.require(characteristic_probe(Field::prime(3)).characteristic == 3, "probe over GF(3)");
  o.require(characteristic_probe(Field::prime(5)).characteristic == 5, "probe over GF(5)");
  if (o.ok) o.note = "PG(2,3) PG(2,5) PG(3,3) pass, PG(2,2) fails axiom 5 only, probe 3 and 5";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism() {
  Outcome o;
  auto base = fs::temp_directory_path() / ("harmonia-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(base);
  for (const char* run : {"a", "b"}) {
    fs::create_directories(base / run);
    std::string cmd = std::string("\"") + HARMONIA_CLI + "\" verify --suite all --seed 7 --out \"" +
                      (base / run).string() + "\" > \"" + (base / run / "stdout.txt").string() + "\"";
    int rc = std::system(cmd.c_str());
    o.require(rc == 0, "verify exited with status " + std::to_string(rc));
  }
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(base / "a")) {
    auto other = base / "b" / e.path().filename();
    o.require(fs::exists(other), e.path().filename().string() + " missing in second run");
    o.require(slurp(e.path()) == slurp(other), e.path().filename().string() + " differs");
    ++files;
  }
  o.require(files == 5, "expected 5 output files");
  fs::remove_all(base);
  if (o.ok) o.note = std::to_string(files) + " files byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const Criterion all[] = {
      {1, "harmonic theorem", 5, harmonic_theorem},
      {2, "klein triangle", 5, klein},
      {3, "harmonic-curve coherence", 20, coherence},
      {4, "circle instance", 1, circle},
      {5, "polar reflections", 20, polarity},
      {6, "tangential map", 10, tangential},
      {7, "ruled-surface polarity", 30, surfaces},
      {8, "lift-section round trip", 30, lift_section},
      {9, "pappus and equipal", 120, pappus},
      {10, "axiom suite", 60, axioms},
      {11, "determinism", 60, determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("threw ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = out.ok && secs < c.limit;
    if (out.ok && !ok) out.note = "over the time limit";
    failed += ok ? 0 : 1;
    std::printf("criterion %2d %-26s %s  %7.2f s (limit %g s)  %s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs,
                c.limit, out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(all)) - failed, std::size(all));
  return failed ? 1 : 0;
}
