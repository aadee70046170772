#include "harmonia/suite.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "harmonia/random.hpp"

namespace harmonia {

namespace {

using Detail = std::optional<std::string>;
using Body = std::function<Detail(Sampler&, Scene&)>;

struct Property {
  const char* suite;
  const char* name;
  bool rational_only;
  Body body;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

// Degenerate random draws are redrawn; anything thrown afterwards is a
// property failure.
template <class F>
auto draw(F f) {
  for (int attempt = 0;; ++attempt) {
    try {
      return f();
    } catch (const Error&) {
      if (attempt == 63) throw;
    }
  }
}

HarmonicCurve random_curve(Sampler& s) {
  return draw([&] {
    auto v = s.quadrangle();
    return HarmonicCurve(Quadrangle(v[0], v[1], v[2], v[3]));
  });
}

RuledSurface random_surface(Sampler& s) {
  return draw([&] { return RuledSurface::from_ruling(Ruling(s.skew_triple())); });
}

std::array<HPoint2, 3> distinct_on(Sampler& s, const HLine2& l, const HPoint2& avoid) {
  return draw([&] {
    std::array<HPoint2, 3> pts{s.point_on(l), s.point_on(l), s.point_on(l)};
    for (int i = 0; i < 3; ++i) {
      if (pts[i] == avoid) fail(ErrorCode::CoincidentPoints, "hit the meet");
      for (int j = 0; j < i; ++j)
        if (pts[i] == pts[j]) fail(ErrorCode::CoincidentPoints, "repeated point");
    }
    return pts;
  });
}

void add_curve(Scene& w, const HarmonicCurve& c) {
  const auto& q = c.generator();
  w.add(q.a(), "A").add(q.c(), "C").add(q.b(), "B").add(q.d(), "D");
}

// ---- harmonicity -----------------------------------------------------------

Detail harmonic_theorem(Sampler& s, Scene& w) {
  auto [a, b, c] = s.collinear_triple();
  w.add(a, "A").add(b, "B").add(c, "C");
  auto line = join(a, b);
  auto d = harmonic_fourth(a, c, b);
  w.add(d, "D");
  for (int k = 0; k < 2; ++k) {
    auto [p, r] = draw([&] {
      auto p1 = s.point_off(line);
      auto p2 = s.point_on(join(p1, c));
      if (p2 == p1 || incident(p2, line)) fail(ErrorCode::DegenerateAuxiliaries, "auxiliary on A∨B");
      return std::pair{p1, p2};
    });
    if (!(harmonic_fourth(a, c, b, p, r) == d)) {
      w.add(p, "P").add(r, "R");
      return "auxiliary points change the harmonic fourth";
    }
  }
  auto cr = cross_ratio(a, b, c, d);
  if (!cr || !(*cr == Scalar(s.field(), -1))) return "cross-ratio (A,B;C,D) is not -1";
  return {};
}

Detail klein_group(Sampler& s, Scene& w) {
  auto [a, b, c] = s.triangle();
  w.add(a, "A").add(b, "B").add(c, "C");
  auto sa = join(b, c), sb = join(c, a), sc = join(a, b);
  auto k = klein_triangle(a, sa, b, sb, c, sc);
  for (int u = 1; u < 4; ++u) {
    if (!k[u].then(k[u]).is_identity()) return "reflection is not an involution";
    for (int v = 1; v < 4; ++v)
      if (u != v && !(k[u].then(k[v]) == k[6 - u - v])) return "product of two reflections is not the third";
  }
  auto x = draw([&] {
    auto p = s.point2();
    if (incident(p, sa) || incident(p, sb) || incident(p, sc)) fail(ErrorCode::PointOnLine, "on a side");
    return p;
  });
  w.add(x, "X");
  Quadrangle orbit(x, apply(k[1], x), apply(k[2], x), apply(k[3], x));
  auto dp = orbit.diagonal_points();
  std::array<HPoint2, 3> found{dp[0], dp[1], orbit.center()};
  for (const auto& t : {a, b, c})
    if (std::count(found.begin(), found.end(), t) != 1) return "orbit quadrangle has another diagonal triangle";
  return {};
}

Detail reflection(Sampler& s, Scene& w) {
  auto [c, m] = draw([&] {
    auto p = s.point2();
    auto l = s.line2();
    if (incident(p, l)) fail(ErrorCode::IncidentCenterMirror, "center on mirror");
    return std::pair{p, l};
  });
  w.add(c, "C").add(m, "m");
  auto rho = harmonic_reflection(c, m);
  if (!rho.then(rho).is_identity()) return "not an involution";
  auto on = s.point_on(m);
  if (!(apply(rho, on) == on)) return "mirror not fixed";
  auto x = draw([&] {
    auto p = s.point2();
    if (p == c || incident(p, m)) fail(ErrorCode::PointOnLine, "degenerate");
    return p;
  });
  w.add(x, "X");
  auto foot = meet(join(c, x), m);
  if (!is_harmonic_set(c, x, foot, apply(rho, x))) return "X, Xρ not harmonic with respect to C and the mirror";
  return {};
}

// ---- curves ----------------------------------------------------------------

Detail hc_coherence(Sampler& s, Scene& w) {
  auto curve = random_curve(s);
  add_curve(w, curve);
  const auto& q = curve.generator();
  auto samples = curve.sample(20);
  if (samples.size() < 5) return "too few samples";
  auto fit = conic_fit({q.a(), q.c(), q.b(), q.d(), samples[4]});
  if (!(fit == curve.conic())) return "five-point conic differs from the curve conic";
  for (const auto& z : samples) {
    if (!curve.contains(z)) return "sample fails the harmonic pencil test";
    if (!fit.contains(z)) return "sample off the fitted conic";
    auto t = curve.tangent_at(z);
    if (!incident(z, t) || !(t == curve.conic().polar(z))) return "tangent pairing broken";
    auto x = curve.parameter_of(z);
    if (x == q.a() || x == q.b()) continue;
    if (!(a_construction_point(q.a(), curve.tangents()[0], q.b(), curve.tangents()[2], q.c(), x) == z)) {
      w.add(x, "X").add(z, "Z");
      return "A-construction disagrees with hc_point";
    }
  }
  return {};
}

Detail circle(Sampler& s, Scene& w) {
  auto c = inscribed_square(s.field());
  auto n = 20 + s.rng().below(20);
  for (const auto& z : c.sample(n))
    if (!(z[0] * z[0] + z[1] * z[1] - z[2] * z[2]).is_zero()) {
      w.add(z, "Z");
      return "sample off x² + y² = w²";
    }
  return {};
}

Detail projection(Sampler& s, Scene& w) {
  auto curve = random_curve(s);
  add_curve(w, curve);
  auto t = s.collineation2();
  const auto& q = curve.generator();
  HarmonicCurve image(Quadrangle(apply(t, q.a()), apply(t, q.c()), apply(t, q.b()), apply(t, q.d())));
  for (int k = 0; k < 8; ++k) {
    auto x = s.point_on(curve.q());
    if (!(image.hc_point(apply(t, x)) == apply(t, curve.hc_point(x)))) return "projection does not commute";
  }
  return {};
}

// ---- polarity --------------------------------------------------------------

Detail polar_reflection(Sampler& s, Scene& w) {
  auto curve = random_curve(s);
  add_curve(w, curve);
  auto p = draw([&] {
    auto x = s.point2();
    if (curve.conic().contains(x)) fail(ErrorCode::PoleOnCurve, "on curve");
    return x;
  });
  w.add(p, "P");
  auto polar = curve.polar_of_point(p);
  if (!curve.conic().invariant_under(harmonic_reflection(p, polar))) return "ρ(P, p) does not preserve the conic";
  if (!curve.polar_reflection_invariance(p, 12)) return "ρ(P, p) moves a sample off the curve";
  if (!(curve.pole_of_line(polar) == p)) return "pole of the polar differs";
  for (const auto& z : curve.sample(12))
    if (!incident(z, curve.polar_of_point(z))) return "curve point off its polar";
  auto r = s.point2();
  if (!curve.conic().contains(r) && incident(r, curve.polar_of_point(r))) return "off-curve point on its polar";
  return {};
}

Detail tangential(Sampler& s, Scene& w) {
  auto curve = random_curve(s);
  add_curve(w, curve);
  auto smp = curve.sample(20);
  if (smp.size() < 8) return "too few samples";
  const auto& tp = smp[4];
  const auto& q = curve.generator();
  auto tm = [&](const HPoint2& x) { return curve.tangential_map(tp, x); };
  if (!is_harmonic_set(tm(q.a()), tm(q.c()), tm(q.b()), tm(q.d()))) return "generator image is not a harmonic set";
  const auto& a = smp[5];
  const auto& b = smp[6];
  auto eta = curve.hyperbolic_reflection(a, b);
  if (!curve.conic().invariant_under(eta)) return "η does not preserve the curve";
  auto rho = harmonic_reflection_on_line(tm(a), tm(b));
  if (!(rho.line() == curve.tangent_at(tp))) return "A', B' not on t";
  for (std::size_t k = 7; k < smp.size(); ++k) {
    auto ex = apply(eta, smp[k]);
    if (smp[k] == tp || ex == tp) continue;
    if (!(rho(tm(smp[k])) == tm(ex))) return "η does not correspond to ρ(A', B') on t";
  }
  return {};
}

// ---- ruled surfaces --------------------------------------------------------

Detail surface_polarity(Sampler& s, Scene& w) {
  auto surf = random_surface(s);
  for (const auto& l : surf.red()) w.add(l, "", "red");
  for (const auto& l : surf.blue()) w.add(l, "", "blue");
  auto p = draw([&] {
    auto x = s.point3();
    if (surf.contains(x)) fail(ErrorCode::PointOnSurface, "on surface");
    return x;
  });
  w.add(p, "P");
  auto pi = surf.polar_plane(p);
  if (!(pi == surf.quadric().polar(p))) return "synthetic polar plane differs from the quadric polar";
  auto rho = harmonic_reflection(p, pi);
  Ruling blue_family(surf.red()), red_family(surf.blue());
  for (const auto& l : surf.red_rules(4))
    if (!blue_family.is_rule(apply(rho, l))) return "ρ(P, π) keeps a red rule red";
  for (const auto& l : surf.blue_rules(4))
    if (!red_family.is_rule(apply(rho, l))) return "ρ(P, π) keeps a blue rule blue";
  if (!harmonic_pencil_at_contact(dandelin_from_surface(surf, p), p, pi)) return "contact pencil is not harmonic";
  return {};
}

Detail lift_section(Sampler& s, Scene& w) {
  auto curve = random_curve(s);
  add_curve(w, curve);
  auto chart = PlaneChart::z0(s.field());
  auto lift = lift_curve_to_surface(curve, chart);
  if (!(lift.surface.polar_plane(lift.pole) == chart.plane())) return "pole is not polar to the curve plane";
  auto sec = section(lift.surface, chart);
  auto samples = curve.sample(20);
  for (const auto& z : samples) {
    if (!lift.surface.contains(chart.point(z))) return "curve point off the lifted surface";
    if (!sec.curve.contains(z)) return "curve point off the section";
  }
  for (const auto& z : sec.curve.sample(20))
    if (!curve.contains(z)) return "section point off the curve";
  return {};
}

// ---- Pappus and Equipal ----------------------------------------------------

struct Hexagon {
  HLine2 l1, l2;
  std::array<HPoint2, 3> a, b;
};

Hexagon random_hexagon(Sampler& s) {
  return draw([&] {
    auto l1 = s.line2(), l2 = s.line2();
    if (l1 == l2) fail(ErrorCode::CoincidentLines, "same line");
    auto o = meet(l1, l2);
    return Hexagon{l1, l2, distinct_on(s, l2, o), distinct_on(s, l1, o)};
  });
}

Detail pappus(Sampler& s, Scene& w) {
  auto h = random_hexagon(s);
  for (const auto& x : h.a) w.add(x, "A");
  for (const auto& x : h.b) w.add(x, "B");
  if (!pappus_check(h.l1, h.l2, h.b, h.a).collinear) return "Pappus points not collinear";
  return {};
}

Detail pascal(Sampler& s, Scene& w) {
  auto curve = random_curve(s);
  add_curve(w, curve);
  auto smp = curve.sample(16);
  if (smp.size() < 6) return "too few samples";
  for (std::size_t i = 0; i < 6; ++i) std::swap(smp[i], smp[i + s.rng().below(smp.size() - i)]);
  std::array<HPoint2, 6> z{smp[0], smp[1], smp[2], smp[3], smp[4], smp[5]};
  for (const auto& x : z) w.add(x, "Z");
  if (!pascal_check(curve, z).collinear) return "Pascal points not collinear";
  return {};
}

Detail equipal_witness(Sampler& s, Scene& w) {
  auto h = random_hexagon(s);
  auto chart = PlaneChart::z0(s.field());
  auto wit = pappus_witness(chart, h.a, h.b);
  if (!wit.pappus_collinear || !equipal_from_pappus_witness(wit)) return "witness fails Pappus or Equipal";
  auto wp = pappus_w_point(wit);
  if (!(wp.w == wp.via_a3) || !(wp.w == wp.via_b3)) return "W point descriptions disagree";
  auto moved = h.b;
  moved[2] = draw([&] {
    auto x = s.point_off(h.l1);
    if (incident(x, h.l2)) fail(ErrorCode::PointOnLine, "on the A line");
    return x;
  });
  auto pert = pappus_witness(chart, h.a, moved);
  for (const auto& l : pert.a) w.add(l, "a", "red");
  for (const auto& l : pert.b) w.add(l, "b", "blue");
  if (pert.pappus_collinear != equipal_from_pappus_witness(pert)) return "Pappus and Equipal disagree on a perturbed witness";
  return {};
}

Detail equipal_instance_check(Sampler& s, Scene& w) {
  auto [r, rules] = draw([&] {
    Ruling ru(s.skew_triple());
    auto rs = ru.sample_rules(3);
    if (rs.size() < 3) fail(ErrorCode::DegenerateConfiguration, "too few rules");
    return std::pair{ru, rs};
  });
  for (const auto& l : r.generators()) w.add(l, "", "red");
  if (!equipal_check(r, rules[0], rules[1], rules[2], 4)) return "Equipal instance fails";
  return {};
}

const std::vector<Property>& properties() {
  static const std::vector<Property> all{
      {"harmonicity", "harmonic-theorem", false, harmonic_theorem},
      {"harmonicity", "klein-triangle", false, klein_group},
      {"harmonicity", "harmonic-reflection", false, reflection},
      {"curves", "hc-coherence", false, hc_coherence},
      {"curves", "circle", true, circle},
      {"curves", "projection-invariance", false, projection},
      {"polarity", "polar-reflection", false, polar_reflection},
      {"polarity", "tangential-map", false, tangential},
      {"ruled", "surface-polarity", false, surface_polarity},
      {"ruled", "lift-section", false, lift_section},
      {"pappus-equipal", "pappus", false, pappus},
      {"pappus-equipal", "pascal", false, pascal},
      {"pappus-equipal", "equipal-witness", false, equipal_witness},
      {"pappus-equipal", "equipal-instance", false, equipal_instance_check},
  };
  return all;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

PropertyResult run_property(const Property& prop, const RunConfig& cfg) {
  PropertyResult r;
  r.suite = prop.suite;
  r.name = prop.name;
  auto t0 = Clock::now();
  const std::uint64_t stream = splitmix64(cfg.seed ^ fnv1a(std::string(prop.suite) + "/" + prop.name));
  std::uint64_t first = cfg.instance.value_or(0);
  std::uint64_t last = cfg.instance ? first + 1 : cfg.instances;
  for (std::uint64_t i = first; i < last; ++i) {
    Sampler s(Rng::for_instance(stream, i), cfg.field);
    Scene w;
    Detail d;
    try {
      d = prop.body(s, w);
    } catch (const Error& e) {
      d = e.what();
    }
    ++r.instances;
    if (!d) continue;
    ++r.failures;
    if (r.witnesses.size() < 3) r.witnesses.push_back(Failure{i, *d, std::move(w), {}});
  }
  r.status = r.failures ? Status::fail : Status::pass;
  r.seconds = since(t0);
  return r;
}

PropertyResult from_check(const FiniteGeometry& g, const CheckResult& c, double seconds) {
  PropertyResult r;
  r.suite = "finite";
  r.name = g.name() + " " + c.id;
  r.status = c.status;
  r.instances = c.instances;
  r.seconds = seconds;
  if (c.status == Status::fail) {
    r.failures = 1;
    r.expected = c.id == "axiom-5" && g.p() == 2;
    r.witnesses.push_back(Failure{0, c.detail, {}, c.witness});
  }
  return r;
}

template <class F>
void timed(std::vector<PropertyResult>& out, const FiniteGeometry& g, F f) {
  auto t0 = Clock::now();
  auto c = f();
  out.push_back(from_check(g, c, since(t0)));
}

void run_finite(const RunConfig& cfg, std::vector<PropertyResult>& out) {
  std::vector<std::pair<int, std::uint32_t>> models;
  if (cfg.p) {
    models.emplace_back(2, *cfg.p);
    if (*cfg.p <= cfg.budget.space_p) models.emplace_back(3, *cfg.p);
  } else {
    models = {{2, 3}, {2, 5}, {3, 3}};
  }
  for (auto [dim, p] : models) {
    auto g = FiniteGeometry::enumerate(dim, p, cfg.budget);
    for (int k = 1; k <= 5; ++k) timed(out, g, [&] { return check_axiom(g, k); });
    if (dim == 2) {
      if (p <= cfg.budget.pappus_p) timed(out, g, [&] { return pappus_exhaustive(g, Exec::parallel, cfg.budget); });
      if (p > 2) {
        timed(out, g, [&] { return harmonic_independence_exhaustive(g); });
        timed(out, g, [&] { return klein_exhaustive(g); });
      }
      if (p == 3) timed(out, g, [&] { return duality_exhaustive(g); });
    } else if (p <= cfg.budget.equipal_p) {
      timed(out, g, [&] { return equipal_exhaustive(g, Exec::parallel, cfg.budget); });
    }
    timed(out, g, [&] {
      auto probe = characteristic_probe(g);
      CheckResult c;
      c.id = "characteristic";
      c.instances = probe.steps;
      if (probe.characteristic != p) {
        c.status = Status::fail;
        c.witness = {probe.characteristic};
        c.detail = "probe returned " + std::to_string(probe.characteristic);
      }
      return c;
    });
  }
}

std::string replay_command(const RunConfig& cfg, const PropertyResult& r, const Failure& f) {
  if (r.suite == "finite") return {};
  return "verify --suite " + r.suite + " --seed " + std::to_string(cfg.seed) + " --field " + cfg.field.to_string() +
         " --instance " + std::to_string(f.instance);
}

std::string status_word(const PropertyResult& r) {
  if (r.status == Status::fail) return r.expected ? "expected-failure" : "FAIL";
  return std::string(to_string(r.status));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"harmonicity", "curves", "polarity", "ruled", "pappus-equipal", "finite",
                                              "all"};
  return names;
}

void validate(const RunConfig& cfg) {
  if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
    fail(ErrorCode::ConfigInvalid, "unknown suite '" + cfg.suite + "'");
  if (cfg.instances == 0) fail(ErrorCode::ConfigInvalid, "instances must be positive");
  if (cfg.field.characteristic() == 2 && cfg.suite != "finite")
    fail(ErrorCode::ConfigInvalid, "random suites need a field of characteristic other than 2");
  if (cfg.p && !is_prime(*cfg.p)) fail(ErrorCode::ConfigInvalid, "--p must be prime");
}

Report run_suite(const RunConfig& cfg) {
  validate(cfg);
  Report rep;
  rep.config = cfg;
  bool all = cfg.suite == "all";
  for (const auto& prop : properties()) {
    if (!all && cfg.suite != prop.suite) continue;
    if (prop.rational_only && !cfg.field.is_rational()) continue;
    rep.properties.push_back(run_property(prop, cfg));
  }
  if (all || cfg.suite == "finite") run_finite(cfg, rep.properties);
  return rep;
}

int Report::exit_code() const {
  bool expected = false;
  for (const auto& p : properties) {
    if (p.status != Status::fail) continue;
    if (!p.expected) return 1;
    expected = true;
  }
  return expected ? 3 : 0;
}

std::string Report::text() const {
  std::ostringstream os;
  os << "harmonia verify suite=" << config.suite << " seed=" << config.seed << " field=" << config.field.to_string()
     << " instances=" << (config.instance ? "#" + std::to_string(*config.instance) : std::to_string(config.instances))
     << "\n";
  std::size_t failed = 0, expected = 0;
  for (const auto& p : properties) {
    std::string name = p.suite + "/" + p.name;
    os << std::left << std::setw(44) << name << std::setw(18) << status_word(p) << p.instances;
    if (p.failures) os << " failures=" << p.failures;
    if (config.timings) os << " " << std::fixed << std::setprecision(3) << p.seconds << "s";
    os << "\n";
    for (const auto& f : p.witnesses) {
      os << "  witness";
      if (p.suite != "finite") os << " instance " << f.instance;
      if (!f.indices.empty()) {
        os << " [";
        for (std::size_t i = 0; i < f.indices.size(); ++i) os << (i ? " " : "") << f.indices[i];
        os << "]";
      }
      os << ": " << f.detail << "\n";
      auto replay = replay_command(config, p, f);
      if (!replay.empty()) os << "  replay: " << replay << "\n";
    }
    if (p.status == Status::fail) (p.expected ? expected : failed) += 1;
  }
  os << "summary: " << properties.size() << " properties, " << failed << " failed, " << expected
     << " expected failures\n";
  return os.str();
}

nlohmann::json Report::json() const {
  nlohmann::json props = nlohmann::json::array();
  for (const auto& p : properties) {
    nlohmann::json j{{"suite", p.suite},          {"name", p.name},         {"status", status_word(p)},
                     {"instances", p.instances}, {"failures", p.failures}, {"expected_failure", p.expected}};
    j["witnesses"] = nlohmann::json::array();
    for (const auto& f : p.witnesses) {
      nlohmann::json wj{{"detail", f.detail}};
      if (p.suite == "finite") {
        wj["indices"] = f.indices;
      } else {
        wj["instance"] = f.instance;
        wj["replay"] = replay_command(config, p, f);
        wj["scene"] = to_json(f.scene);
      }
      j["witnesses"].push_back(std::move(wj));
    }
    if (config.timings) j["seconds"] = p.seconds;
    props.push_back(std::move(j));
  }
  nlohmann::json cfg{{"suite", config.suite},
                     {"seed", config.seed},
                     {"field", config.field.to_string()},
                     {"instances", config.instances}};
  if (config.instance) cfg["instance"] = *config.instance;
  if (config.p) cfg["p"] = *config.p;
  return {{"config", cfg}, {"properties", std::move(props)}, {"exit_code", exit_code()}};
}

}  // namespace harmonia
