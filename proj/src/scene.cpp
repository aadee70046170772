#include "harmonia/scene.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace harmonia {

namespace {

template <std::size_t N>
std::vector<Scalar> to_vector(const Vec<N>& v) {
  return {v.begin(), v.end()};
}

SceneElement element(Kind k, std::vector<Scalar> coords, std::string label, std::string colour) {
  return SceneElement{k, std::move(coords), std::move(label), std::move(colour), {}};
}

int dimension_of(Kind k) {
  switch (k) {
    case Kind::point2:
    case Kind::line2:
      return 2;
    case Kind::point3:
    case Kind::plane3:
    case Kind::line3:
      return 3;
    case Kind::collineation:
      return 0;
  }
  return 0;
}

Kind kind_from(const std::string& s) {
  for (Kind k : {Kind::point2, Kind::line2, Kind::point3, Kind::plane3, Kind::line3, Kind::collineation})
    if (to_string(k) == s) return k;
  fail(ErrorCode::ParseError, "unknown element kind '" + s + "'");
}

double real(const Scalar& s) {
  if (!s.field().is_rational()) fail(ErrorCode::UnrepresentableElement, "finite-field coordinates in SVG");
  return s.rational().get_d();
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Canvas {
  Viewport v;
  double width, height;

  explicit Canvas(const Viewport& vp)
      : v(vp), width(vp.pixels), height(vp.pixels * vp.half_height / vp.half_width) {}
  double px(double x) const { return (x + v.half_width) / (2 * v.half_width) * width; }
  double py(double y) const { return (v.half_height - y) / (2 * v.half_height) * height; }
  bool inside(double x, double y) const {
    const double eps = 1e-9;
    return std::abs(x) <= v.half_width + eps && std::abs(y) <= v.half_height + eps;
  }
};

std::string colour_or(const std::string& c, const char* fallback) { return c.empty() ? fallback : c; }

}  // namespace

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::point2:
      return "point2";
    case Kind::line2:
      return "line2";
    case Kind::point3:
      return "point3";
    case Kind::plane3:
      return "plane3";
    case Kind::line3:
      return "line3";
    case Kind::collineation:
      return "collineation";
  }
  return "?";
}

Scene& Scene::add(const HPoint2& p, std::string label, std::string colour) {
  elements_.push_back(element(Kind::point2, to_vector(p.coords()), std::move(label), std::move(colour)));
  return *this;
}

Scene& Scene::add(const HLine2& l, std::string label, std::string colour) {
  elements_.push_back(element(Kind::line2, to_vector(l.coords()), std::move(label), std::move(colour)));
  return *this;
}

Scene& Scene::add(const HPoint3& p, std::string label, std::string colour) {
  elements_.push_back(element(Kind::point3, to_vector(p.coords()), std::move(label), std::move(colour)));
  return *this;
}

Scene& Scene::add(const HPlane3& pi, std::string label, std::string colour) {
  elements_.push_back(element(Kind::plane3, to_vector(pi.coords()), std::move(label), std::move(colour)));
  return *this;
}

Scene& Scene::add(const PluckerLine& l, std::string label, std::string colour) {
  auto e = element(Kind::line3, to_vector(l.coords()), std::move(label), std::move(colour));
  auto [u, v] = points_on(l);
  for (const auto& p : ladder_points(u, v, 12)) {
    if (p[3].is_zero()) continue;
    e.segment.push_back({p[0] / p[3], p[1] / p[3], p[2] / p[3]});
    if (e.segment.size() == 2) break;
  }
  elements_.push_back(std::move(e));
  return *this;
}

Scene& Scene::add(const Collineation2& t, std::string label) {
  std::vector<Scalar> flat;
  for (const auto& row : t.matrix()) flat.insert(flat.end(), row.begin(), row.end());
  elements_.push_back(element(Kind::collineation, std::move(flat), std::move(label), {}));
  return *this;
}

int Scene::dimension() const {
  int dim = 0;
  for (const auto& e : elements_) {
    int d = dimension_of(e.kind);
    if (d == 0) continue;
    if (dim != 0 && d != dim) fail(ErrorCode::DimensionMismatch, "scene mixes 2D and 3D elements");
    dim = d;
  }
  return dim;
}

nlohmann::json to_json(const Scene& s) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : s.elements()) {
    nlohmann::json j;
    j["kind"] = std::string(to_string(e.kind));
    j["coords"] = nlohmann::json::array();
    for (const auto& c : e.coords) j["coords"].push_back(c.to_string());
    j["label"] = e.label;
    if (!e.colour.empty()) j["colour"] = e.colour;
    if (!e.segment.empty()) {
      j["segment"] = nlohmann::json::array();
      for (const auto& p : e.segment) j["segment"].push_back({p[0].to_string(), p[1].to_string(), p[2].to_string()});
    }
    elements.push_back(std::move(j));
  }
  return {{"format", "harmonia-scene"}, {"dimension", s.dimension()}, {"elements", std::move(elements)}};
}

Scene scene_from_json(const nlohmann::json& j) {
  Scene s;
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    fail(ErrorCode::ParseError, "scene needs an elements array");
  for (const auto& e : j["elements"]) {
    try {
      Kind k = kind_from(e.at("kind").get<std::string>());
      std::vector<Scalar> coords;
      for (const auto& c : e.at("coords")) coords.push_back(Scalar::parse(c.get<std::string>()));
      auto label = e.value("label", std::string());
      auto colour = e.value("colour", std::string());
      auto vec = [&]<std::size_t N>(std::integral_constant<std::size_t, N>) {
        if (coords.size() != N) fail(ErrorCode::ParseError, "wrong coordinate count for " + std::string(to_string(k)));
        Vec<N> v;
        std::copy(coords.begin(), coords.end(), v.begin());
        return v;
      };
      switch (k) {
        case Kind::point2:
          s.add(HPoint2(vec(std::integral_constant<std::size_t, 3>{})), label, colour);
          break;
        case Kind::line2:
          s.add(HLine2(vec(std::integral_constant<std::size_t, 3>{})), label, colour);
          break;
        case Kind::point3:
          s.add(HPoint3(vec(std::integral_constant<std::size_t, 4>{})), label, colour);
          break;
        case Kind::plane3:
          s.add(HPlane3(vec(std::integral_constant<std::size_t, 4>{})), label, colour);
          break;
        case Kind::line3:
          s.add(PluckerLine(vec(std::integral_constant<std::size_t, 6>{})), label, colour);
          break;
        case Kind::collineation: {
          auto flat = vec(std::integral_constant<std::size_t, 9>{});
          Mat<3> m;
          for (std::size_t i = 0; i < 9; ++i) m[i / 3][i % 3] = flat[i];
          s.add(Collineation2(m), label);
          break;
        }
      }
    } catch (const nlohmann::json::exception& ex) {
      fail(ErrorCode::ParseError, ex.what());
    }
  }
  return s;
}

std::string export_svg2d(const Scene& s, const Viewport& vp) {
  if (s.dimension() == 3) fail(ErrorCode::DimensionMismatch, "svg2d export of a 3D scene");
  Canvas cv(vp);
  std::ostringstream body;
  std::vector<std::string> notes;

  for (const auto& e : s.elements()) {
    if (e.kind == Kind::collineation) fail(ErrorCode::UnrepresentableElement, "collineation in svg2d");
    std::vector<double> c;
    for (const auto& x : e.coords) c.push_back(real(x));
    const std::string label = escape(e.label);
    if (e.kind == Kind::point2) {
      auto colour = colour_or(e.colour, "black");
      if (c[2] == 0) {
        double n = std::hypot(c[0], c[1]);
        double dx = c[0] / n, dy = c[1] / n;
        double t = std::min(vp.half_width / std::max(std::abs(dx), 1e-12), vp.half_height / std::max(std::abs(dy), 1e-12));
        double x1 = dx * t, y1 = dy * t, x0 = 0.85 * x1, y0 = 0.85 * y1;
        body << "<line x1=\"" << num(cv.px(x0)) << "\" y1=\"" << num(cv.py(y0)) << "\" x2=\"" << num(cv.px(x1))
             << "\" y2=\"" << num(cv.py(y1)) << "\" stroke=\"" << colour
             << "\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
        if (!label.empty())
          body << "<text x=\"" << num(cv.px(x0)) << "\" y=\"" << num(cv.py(y0) - 6) << "\" fill=\"" << colour << "\">"
               << label << "</text>\n";
        continue;
      }
      double x = c[0] / c[2], y = c[1] / c[2];
      if (!cv.inside(x, y)) {
        notes.push_back("point " + (label.empty() ? std::string("?") : label) + " at (" + num(x) + ", " + num(y) +
                        ") outside the viewport");
        continue;
      }
      body << "<circle cx=\"" << num(cv.px(x)) << "\" cy=\"" << num(cv.py(y)) << "\" r=\"3\" fill=\"" << colour
           << "\"/>\n";
      if (!label.empty())
        body << "<text x=\"" << num(cv.px(x) + 5) << "\" y=\"" << num(cv.py(y) - 5) << "\">" << label << "</text>\n";
      continue;
    }
    // line2: c0 x + c1 y + c2 = 0
    auto colour = colour_or(e.colour, "steelblue");
    if (c[0] == 0 && c[1] == 0) {
      notes.push_back("line " + (label.empty() ? std::string("?") : label) + " is the line at infinity");
      continue;
    }
    std::vector<std::pair<double, double>> hits;
    auto keep = [&](double x, double y) {
      if (!cv.inside(x, y)) return;
      for (const auto& h : hits)
        if (std::abs(h.first - x) < 1e-9 && std::abs(h.second - y) < 1e-9) return;
      hits.emplace_back(x, y);
    };
    for (double x : {-vp.half_width, vp.half_width})
      if (c[1] != 0) keep(x, -(c[0] * x + c[2]) / c[1]);
    for (double y : {-vp.half_height, vp.half_height})
      if (c[0] != 0) keep(-(c[1] * y + c[2]) / c[0], y);
    if (hits.size() < 2) {
      notes.push_back("line " + (label.empty() ? std::string("?") : label) + " misses the viewport");
      continue;
    }
    body << "<line x1=\"" << num(cv.px(hits[0].first)) << "\" y1=\"" << num(cv.py(hits[0].second)) << "\" x2=\""
         << num(cv.px(hits[1].first)) << "\" y2=\"" << num(cv.py(hits[1].second)) << "\" stroke=\"" << colour
         << "\"/>\n";
    if (!label.empty()) {
      double mx = (hits[0].first + hits[1].first) / 2, my = (hits[0].second + hits[1].second) / 2;
      body << "<text x=\"" << num(cv.px(mx) + 4) << "\" y=\"" << num(cv.py(my) + 14) << "\" fill=\"" << colour
           << "\" font-style=\"italic\">" << label << "</text>\n";
    }
  }

  const double total = cv.height + 18.0 * static_cast<double>(notes.size());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(cv.width) << "\" height=\"" << num(total)
      << "\" viewBox=\"0 0 " << num(cv.width) << " " << num(total) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"4\" orient=\"auto\">"
         "<path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(cv.width) << "\" height=\"" << num(cv.height)
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  out << body.str();
  for (std::size_t i = 0; i < notes.size(); ++i)
    out << "<text x=\"4\" y=\"" << num(cv.height + 14 + 18.0 * static_cast<double>(i)) << "\">" << notes[i]
        << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string export_json3d(const Scene& s) {
  if (s.dimension() == 2) fail(ErrorCode::DimensionMismatch, "json3d export of a 2D scene");
  return to_json(s).dump(2) + "\n";
}

Scene curve_scene(const HarmonicCurve& c, std::size_t samples) {
  Scene s;
  for (const auto& z : c.sample(samples)) s.add(z, {}, "grey");
  const auto& q = c.generator();
  const char* names[] = {"A", "C", "B", "D"};
  const char* tangent_names[] = {"a", "c", "b", "d"};
  for (int i = 0; i < 4; ++i) {
    s.add(q.vertex(i), names[i]);
    s.add(c.tangents()[static_cast<std::size_t>(i)], tangent_names[i]);
  }
  s.add(c.pole_q(), "Q", "darkred");
  s.add(c.q(), "q", "darkred");
  return s;
}

Scene dandelin_scene(const DandelinConfiguration& d) {
  Scene s;
  const char* red[] = {"a", "b", "c"};
  const char* blue[] = {"a'", "b'", "c'"};
  for (int i = 0; i < 3; ++i) s.add(d.red()[static_cast<std::size_t>(i)], red[i], "red");
  for (int i = 0; i < 3; ++i) s.add(d.blue()[static_cast<std::size_t>(i)], blue[i], "blue");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s.add(d.basic_point(i, j), std::string(red[i]) + "∧" + blue[j]);
  return s;
}

}  // namespace harmonia
