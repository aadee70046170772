#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "harmonia/random.hpp"
#include "harmonia/suite.hpp"

using namespace harmonia;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::uint64_t seed = 1;
  std::uint64_t instances = 20;
  std::optional<std::uint64_t> instance;
  std::string field = "Q";
  std::optional<std::uint32_t> p;
  int dim = 2;
  std::string suite = "all";
  std::string out;
  std::string format;
  std::string scene = "circle";
  std::size_t samples = 24;
  Budget budget;
  Viewport frame;
  bool timings = false;
};

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << body;
}

void emit(const Options& o, const std::string& body) {
  if (o.out.empty())
    std::cout << body;
  else
    write_file(o.out, body);
}

Sampler sampler(const Options& o) { return Sampler(Rng(o.seed), Field::parse(o.field)); }

std::string render(const Scene& s, const std::string& format, const Viewport& frame = {}) {
  if (format == "svg2d") return export_svg2d(s, frame);
  if (format == "json3d") return export_json3d(s);
  if (format == "json") return to_json(s).dump(2) + "\n";
  fail(ErrorCode::ConfigInvalid, "unknown format '" + format + "'");
}

std::string format_or(const Options& o, const char* fallback) { return o.format.empty() ? fallback : o.format; }

HarmonicCurve random_curve(Sampler& s) {
  for (int attempt = 0;; ++attempt) {
    try {
      auto v = s.quadrangle();
      return HarmonicCurve(Quadrangle(v[0], v[1], v[2], v[3]));
    } catch (const Error&) {
      if (attempt == 63) throw;
    }
  }
}

Scene saddle_dandelin_scene(Field f) {
  auto surf = saddle_surface(f);
  return dandelin_scene(dandelin_from_surface(surf, HPoint3::from_ints({0, 0, 1, -1}, f)));
}

Scene named_scene(const std::string& name, Field f) {
  if (name == "circle") return curve_scene(inscribed_square(f));
  if (name == "saddle-dandelin") return saddle_dandelin_scene(f);
  std::ifstream in(name);
  if (!in) fail(ErrorCode::ConfigInvalid, "no built-in scene or file '" + name + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return scene_from_json(j);
}

RunConfig run_config(const Options& o) {
  RunConfig cfg;
  cfg.seed = o.seed;
  cfg.suite = o.suite;
  cfg.field = Field::parse(o.field);
  cfg.instances = o.instances;
  cfg.instance = o.instance;
  cfg.p = o.p;
  cfg.budget = o.budget;
  cfg.timings = o.timings;
  return cfg;
}

int verify(const Options& o) {
  auto rep = run_suite(run_config(o));
  auto fmt = format_or(o, "text");
  if (fmt != "text" && fmt != "json") fail(ErrorCode::ConfigInvalid, "verify writes text or json");
  std::string body = fmt == "json" ? rep.json().dump(2) + "\n" : rep.text();
  if (o.out.empty()) {
    std::cout << body;
  } else {
    fs::create_directories(o.out);
    fs::path dir(o.out);
    write_file(dir / "report.txt", rep.text());
    write_file(dir / "report.json", rep.json().dump(2) + "\n");
    if (rep.config.field.characteristic() != 2) {
      Field f = rep.config.field;
      if (f.is_rational()) write_file(dir / "circle.svg", export_svg2d(curve_scene(inscribed_square(f))));
      write_file(dir / "saddle-dandelin.json", export_json3d(saddle_dandelin_scene(f)));
    }
    std::cout << rep.text();
  }
  return rep.exit_code();
}

int sample_curve(const Options& o) {
  auto s = sampler(o);
  auto c = random_curve(s);
  auto fmt = format_or(o, "text");
  if (fmt == "text") {
    std::ostringstream os;
    const auto& q = c.generator();
    os << "generator " << q.a().to_string() << " " << q.c().to_string() << " " << q.b().to_string() << " "
       << q.d().to_string() << "\n";
    for (const auto& z : c.sample(o.samples)) os << z.to_string() << "\n";
    emit(o, os.str());
  } else {
    emit(o, render(curve_scene(c, o.samples), fmt, o.frame));
  }
  return 0;
}

int lift(const Options& o) {
  auto s = sampler(o);
  auto c = random_curve(s);
  auto l = lift_curve_to_surface(c, PlaneChart::z0(s.field()));
  Scene sc;
  const char* red[] = {"a", "b", "c"};
  const char* blue[] = {"a'", "b'", "c'"};
  for (int i = 0; i < 3; ++i) sc.add(l.surface.red()[i], red[i], "red");
  for (int i = 0; i < 3; ++i) sc.add(l.surface.blue()[i], blue[i], "blue");
  sc.add(l.pole, "P").add(l.s, "S").add(l.s_prime, "S'");
  sc.add(PlaneChart::z0(s.field()).plane(), "π");
  for (const auto& z : c.sample(o.samples)) sc.add(PlaneChart::z0(s.field()).point(z), {}, "grey");
  emit(o, render(sc, format_or(o, "json3d")));
  return 0;
}

int section_verb(const Options& o) {
  auto s = sampler(o);
  for (int attempt = 0;; ++attempt) {
    try {
      auto surf = RuledSurface::from_ruling(Ruling(s.skew_triple()));
      auto pi = s.plane3();
      auto sec = section(surf, pi);
      auto fmt = format_or(o, "svg2d");
      if (fmt == "json3d") {
        Scene sc;
        for (const auto& l : surf.red()) sc.add(l, {}, "red");
        for (const auto& l : surf.blue()) sc.add(l, {}, "blue");
        sc.add(pi, "π");
        for (const auto& p : sec.points) sc.add(p);
        emit(o, render(sc, fmt));
      } else {
        emit(o, render(curve_scene(sec.curve, o.samples), fmt, o.frame));
      }
      return 0;
    } catch (const Error&) {
      if (attempt == 63) throw;
    }
  }
}

int pappus_verb(const Options& o) {
  auto s = sampler(o);
  std::uint64_t bad = 0;
  std::ostringstream os;
  for (std::uint64_t i = 0; i < o.instances; ++i) {
    for (int attempt = 0;; ++attempt) {
      try {
        auto l1 = s.line2(), l2 = s.line2();
        auto a = std::array{s.point_on(l2), s.point_on(l2), s.point_on(l2)};
        auto b = std::array{s.point_on(l1), s.point_on(l1), s.point_on(l1)};
        auto r = pappus_check(l1, l2, b, a);
        auto wit = pappus_witness(PlaneChart::z0(s.field()), a, b);
        bool equipal = equipal_from_pappus_witness(wit);
        if (!r.collinear || !equipal) ++bad;
        os << "hexagon " << i << ": " << r.points[0].to_string() << " " << r.points[1].to_string() << " "
           << r.points[2].to_string()
           << (r.collinear ? " collinear" : " NOT collinear") << (equipal ? ", equipal" : ", NOT equipal") << "\n";
        break;
      } catch (const Error&) {
        if (attempt == 63) throw;
      }
    }
  }
  emit(o, os.str());
  return bad ? 1 : 0;
}

int finite_verb(const Options& o) {
  auto g = FiniteGeometry::enumerate(o.dim, o.p.value_or(3), o.budget);
  std::ostringstream os;
  os << g.name() << ": " << g.point_count() << " points, " << g.line_count() << " lines";
  if (g.dimension() == 3) os << ", " << g.plane_count() << " planes";
  os << "\n";
  bool failed = false, expected = false;
  auto line = [&](const CheckResult& c) {
    os << c.id << " " << to_string(c.status) << " " << c.instances;
    if (!c.witness.empty()) {
      os << " [";
      for (std::size_t i = 0; i < c.witness.size(); ++i) os << (i ? " " : "") << c.witness[i];
      os << "]";
    }
    if (!c.detail.empty()) os << " " << c.detail;
    os << "\n";
    if (c.status == Status::fail) (c.id == "axiom-5" && g.p() == 2 ? expected : failed) = true;
  };
  for (const auto& c : check_axioms(g)) line(c);
  if (g.dimension() == 2 && g.p() <= o.budget.pappus_p) line(pappus_exhaustive(g, Exec::parallel, o.budget));
  if (g.dimension() == 3 && g.p() <= o.budget.equipal_p) line(equipal_exhaustive(g, Exec::parallel, o.budget));
  auto probe = characteristic_probe(g);
  os << "characteristic " << probe.characteristic << " after " << probe.steps << " steps\n";
  emit(o, os.str());
  return failed ? 1 : expected ? 3 : 0;
}

int export_verb(const Options& o) {
  Field f = Field::parse(o.field);
  auto sc = named_scene(o.scene, f);
  auto fmt = o.format.empty() ? (sc.dimension() == 3 ? "json3d" : "svg2d") : o.format;
  emit(o, render(sc, fmt, o.frame));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonia: exact projective geometry checks and exports"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "64-bit seed");
    c->add_option("--field", o.field, "Q or GF(p)");
    c->add_option("--out", o.out, "output file (directory for verify)");
    c->add_option("--format", o.format, "svg2d, json3d, json or text");
    c->add_option("--frame", o.frame.half_width, "SVG viewport half-width in chart units")
        ->check(CLI::PositiveNumber);
    c->add_option("--pixels", o.frame.pixels, "SVG width in pixels");
  };
  auto budgets = [&](CLI::App* c) {
    c->add_option("--budget-plane", o.budget.plane_p, "largest p enumerated for PG(2,p)");
    c->add_option("--budget-space", o.budget.space_p, "largest p enumerated for PG(3,p)");
    c->add_option("--budget-pappus", o.budget.pappus_p, "largest p for exhaustive Pappus");
    c->add_option("--budget-equipal", o.budget.equipal_p, "largest p for exhaustive Equipal");
  };

  auto* v = app.add_subcommand("verify", "run verification suites");
  common(v);
  budgets(v);
  v->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_names()));
  v->add_option("--instances", o.instances, "random instances per property")->check(CLI::PositiveNumber);
  v->add_option("--instance", o.instance, "replay a single instance");
  v->add_option("--p", o.p, "prime for the finite suite");
  v->add_flag("--timings", o.timings, "include wall-clock times");

  auto* sc = app.add_subcommand("sample-curve", "random harmonic curve");
  common(sc);
  sc->add_option("--instances", o.samples, "number of samples");
  auto* li = app.add_subcommand("lift", "lift a random curve to a ruled surface");
  common(li);
  li->add_option("--instances", o.samples, "number of curve samples");
  auto* se = app.add_subcommand("section", "plane section of a random ruled surface");
  common(se);
  se->add_option("--instances", o.samples, "number of curve samples");
  auto* pa = app.add_subcommand("pappus", "random Pappus hexagons with their Equipal witnesses");
  common(pa);
  pa->add_option("--instances", o.instances, "hexagons")->check(CLI::PositiveNumber);
  auto* fi = app.add_subcommand("finite", "enumerate PG(d,p) and check it exhaustively");
  common(fi);
  budgets(fi);
  fi->add_option("--p", o.p, "prime");
  fi->add_option("--dim", o.dim, "2 or 3");
  auto* ex = app.add_subcommand("export", "export a built-in or JSON scene");
  common(ex);
  ex->add_option("--scene", o.scene, "circle, saddle-dandelin or a scene JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  o.frame.half_height = o.frame.half_width;

  try {
    if (*v) return verify(o);
    if (*sc) return sample_curve(o);
    if (*li) return lift(o);
    if (*se) return section_verb(o);
    if (*pa) return pappus_verb(o);
    if (*fi) return finite_verb(o);
    if (*ex) return export_verb(o);
  } catch (const Error& e) {
    std::cerr << "harmonia: " << e.what() << "\n";
    auto c = e.code();
    return c == ErrorCode::ConfigInvalid || c == ErrorCode::ParseError || c == ErrorCode::NotPrime ||
                   c == ErrorCode::BudgetExceeded || c == ErrorCode::DimensionMismatch ||
                   c == ErrorCode::UnrepresentableElement
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "harmonia: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
