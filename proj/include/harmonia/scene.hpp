#pragma once

// Labelled element lists in the JSON scene format, and their SVG rendering
// through the affine chart w = 1.
//
// Element: {"kind": "point2|line2|point3|plane3|line3|collineation",
//           "coords": [scalar strings], "label": string}
// plus optional "colour" and, for line3, "segment": two affine points.

#include <string>
#include <vector>

#include "harmonia/curve.hpp"
#include "harmonia/ruled.hpp"
#include "json.hpp"

namespace harmonia {

enum class Kind { point2, line2, point3, plane3, line3, collineation };
std::string_view to_string(Kind k);

struct SceneElement {
  Kind kind;
  std::vector<Scalar> coords;
  std::string label;
  std::string colour;
  std::vector<std::array<Scalar, 3>> segment;
};

class Scene {
 public:
  Scene& add(const HPoint2& p, std::string label = {}, std::string colour = {});
  Scene& add(const HLine2& l, std::string label = {}, std::string colour = {});
  Scene& add(const HPoint3& p, std::string label = {}, std::string colour = {});
  Scene& add(const HPlane3& pi, std::string label = {}, std::string colour = {});
  /// Attaches a segment between the first two affine points of the ladder.
  Scene& add(const PluckerLine& l, std::string label = {}, std::string colour = {});
  Scene& add(const Collineation2& t, std::string label = {});

  const std::vector<SceneElement>& elements() const { return elements_; }
  bool empty() const { return elements_.empty(); }
  /// 2 or 3, or 0 for an empty scene or a lone collineation. Throws
  /// DimensionMismatch on mixed dimensions.
  int dimension() const;

 private:
  std::vector<SceneElement> elements_;
};

nlohmann::json to_json(const Scene& s);
/// Throws ParseError.
Scene scene_from_json(const nlohmann::json& j);

struct Viewport {
  double half_width = 2.5;
  double half_height = 2.5;
  int pixels = 600;
};

/// Points as dots, ideal points as arrows at the frame, lines clipped to the
/// frame; the line at infinity and lines missing the frame become frame
/// annotations. Throws DimensionMismatch for 3D elements and
/// UnrepresentableElement for collineations or finite-field coordinates.
std::string export_svg2d(const Scene& s, const Viewport& v = {});
/// Throws DimensionMismatch for 2D elements.
std::string export_json3d(const Scene& s);

/// Samples, the four vertex tangents, Q and q.
Scene curve_scene(const HarmonicCurve& c, std::size_t samples = 24);
/// Red and blue lines with the nine basic points.
Scene dandelin_scene(const DandelinConfiguration& d);

}  // namespace harmonia
