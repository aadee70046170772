#pragma once

// Doubly ruled surfaces presented by incidence: three pairwise skew lines
// generate a transversal ruling, whose rules generate the opposite one.
//
// Colours follow Dandelin configurations: every red line meets every blue
// line and lines of one colour are pairwise skew. Red rules are the
// transversals of the blue generators and vice versa.

#include <vector>

#include "harmonia/curve.hpp"

namespace harmonia {

/// Projective frame of a plane in space: the images of [1:0:0], [0:1:0],
/// [0:0:1] as fixed vectors, so the chart is a linear injection.
class PlaneChart {
 public:
  explicit PlaneChart(const std::array<Vec<4>, 3>& columns);
  /// (x, y, w) ↦ (x, y, 0, w), the plane z = 0.
  static PlaneChart z0(Field f = Field::rational());
  /// Basis of the plane from a row-reduced nullspace.
  static PlaneChart for_plane(const HPlane3& pi);

  const HPlane3& plane() const { return plane_; }
  const std::array<Vec<4>, 3>& columns() const { return cols_; }
  Field field() const { return plane_.field(); }
  HPoint3 point(const HPoint2& p) const;
  PluckerLine line(const HLine2& l) const;
  /// Throws ArgumentOffLine for points or lines outside the plane.
  HPoint2 pull(const HPoint3& p) const;
  HLine2 pull(const PluckerLine& l) const;

 private:
  std::array<Vec<4>, 3> cols_;
  HPlane3 plane_;
};

/// Symmetric 4x4 form. Rank is not enforced so degenerate fits can be
/// reported.
class QuadricMatrix {
 public:
  explicit QuadricMatrix(const Mat<4>& m);

  const Mat<4>& matrix() const { return m_; }
  std::size_t rank() const;
  Scalar value(const HPoint3& p) const;
  bool contains(const HPoint3& p) const { return value(p).is_zero(); }
  HPlane3 polar(const HPoint3& p) const;
  HPoint3 pole(const HPlane3& pi) const;
  /// πᵀ adj(M) π = 0.
  bool is_tangent(const HPlane3& pi) const;
  bool invariant_under(const Collineation3& t) const;
  /// Eᵀ M E for the chart matrix E.
  Mat<3> restrict_to(const PlaneChart& chart) const;

  bool operator==(const QuadricMatrix& o) const { return m_ == o.m_; }

 private:
  Mat<4> m_;
};

/// Throws DegeneratePointSet when the nine points do not fix a quadric.
QuadricMatrix quadric_fit(const std::array<HPoint3, 9>& pts);

/// (X∨a) ∧ (X∨b): the line through X meeting a and b.
PluckerLine transversal_through_point(const HPoint3& x, const PluckerLine& a, const PluckerLine& b);

/// Transversal ruling R(a, b, c) of three pairwise skew lines.
class Ruling {
 public:
  /// Throws CoplanarGenerators.
  explicit Ruling(std::array<PluckerLine, 3> generators);

  const std::array<PluckerLine, 3>& generators() const { return gens_; }
  Field field() const { return gens_[0].field(); }

  /// (b∧α) ∨ (c∧α) for a plane α through one generator.
  PluckerLine rule_from_plane(const HPlane3& alpha) const;
  /// Unique rule through a point of one generator.
  PluckerLine rule_through_point(const HPoint3& p) const;
  /// Rule through any point of the surface. Throws PointNotOnSurface.
  PluckerLine rule_through_surface_point(const HPoint3& p) const;
  bool is_rule(const PluckerLine& l) const;
  /// Rules through ladder_points on the first generator.
  std::vector<PluckerLine> sample_rules(std::size_t count) const;

 private:
  std::array<PluckerLine, 3> gens_;
};

class DandelinConfiguration {
 public:
  /// Throws DegenerateConfiguration unless opposite colours meet and equal
  /// colours are skew.
  DandelinConfiguration(std::array<PluckerLine, 3> red, std::array<PluckerLine, 3> blue);
  /// No incidence checks, for fault injection.
  static DandelinConfiguration unchecked(std::array<PluckerLine, 3> red, std::array<PluckerLine, 3> blue);

  const std::array<PluckerLine, 3>& red() const { return red_; }
  const std::array<PluckerLine, 3>& blue() const { return blue_; }
  bool valid() const;
  /// red_i ∧ blue_j.
  HPoint3 basic_point(int i, int j) const;
  /// red_i ∨ blue_j.
  HPlane3 tangent_plane(int i, int j) const;

 private:
  struct Unchecked {};
  DandelinConfiguration(std::array<PluckerLine, 3> red, std::array<PluckerLine, 3> blue, Unchecked);
  std::array<PluckerLine, 3> red_, blue_;
};

class RuledSurface {
 public:
  /// Three red and three blue lines forming a Dandelin configuration.
  RuledSurface(std::array<PluckerLine, 3> red, std::array<PluckerLine, 3> blue);
  /// Red = the generators, blue = three sampled rules.
  static RuledSurface from_ruling(const Ruling& r);

  const std::array<PluckerLine, 3>& red() const { return red_; }
  const std::array<PluckerLine, 3>& blue() const { return blue_; }
  Field field() const { return red_[0].field(); }
  const QuadricMatrix& quadric() const { return quadric_; }

  /// Members of each family, transversals of the opposite generators.
  std::vector<PluckerLine> red_rules(std::size_t count) const;
  std::vector<PluckerLine> blue_rules(std::size_t count) const;
  std::vector<HPoint3> sample_points(std::size_t count) const;

  /// Synthetic membership: on a red generator, or the transversal through
  /// the point to two of them meets the third.
  bool contains(const HPoint3& p) const;
  PluckerLine red_rule_through(const HPoint3& z) const;
  PluckerLine blue_rule_through(const HPoint3& z) const;
  /// Span of the two rules through z. Throws PointNotOnSurface.
  HPlane3 tangent_plane_at(const HPoint3& z) const;
  /// A∨B∨C with A = a ∧ a', a' = rule of the blue family in a∨P.
  /// Throws PointOnSurface.
  HPlane3 polar_plane(const HPoint3& p) const;
  /// Meet of the tangent planes at the points where π cuts the red
  /// generators. Throws TangentPlane.
  HPoint3 pole_of_plane(const HPlane3& pi) const;
  bool is_tangent(const HPlane3& pi) const { return quadric_.is_tangent(pi); }

 private:
  std::array<PluckerLine, 3> red_, blue_;
  QuadricMatrix quadric_;
};

/// Red generators fixed, blue lines a', b', c' with P on a∨a', b∨b', c∨c'.
/// xy = zw with red rules [k:0:0:1]∨[0:1:k:0] and blue [0:k:0:1]∨[1:0:k:0],
/// k = 0, 1, 2.
RuledSurface saddle_surface(Field f = Field::rational());

DandelinConfiguration dandelin_from_surface(const RuledSurface& s, const HPoint3& p);

/// The lines red_i, A∨P, blue_i, α∧π through A = red_i ∧ blue_i (with
/// α = red_i ∨ blue_i) form a harmonic pencil for each i.
bool harmonic_pencil_at_contact(const DandelinConfiguration& d, const HPoint3& p, const HPlane3& pi);

/// Instance-level Equipal check: a', b', c' are pairwise skew rules of r;
/// the generators of r meet all three, and n_samples rules of R(a', b', c')
/// each meet n_samples sampled rules of r. Throws NotRulesOfR when a', b',
/// c' are not pairwise skew.
bool equipal_check(const Ruling& r, const PluckerLine& a1, const PluckerLine& b1, const PluckerLine& c1,
                   std::size_t n_samples);

struct Lift {
  RuledSurface surface;
  HPoint3 pole;  // P, polar to the plane of the curve
  HPoint3 s, s_prime;
};

/// Surface through a harmonic curve drawn in chart.plane(): P, S on a line
/// through Q = a∧b, S' = S·ρ(P, Q), red S∨A, S'∨B, blue S∨B, S'∨A, plus
/// the transversals through C. Throws DegenerateLiftChoice if every
/// deterministic choice degenerates.
Lift lift_curve_to_surface(const HarmonicCurve& curve, const PlaneChart& chart);

struct Section {
  PlaneChart chart;
  HarmonicCurve curve;
  std::vector<HPoint3> points;
};

/// Plane section as a harmonic curve through the first three section
/// points. Throws TangentPlane.
Section section(const RuledSurface& s, const PlaneChart& chart, std::size_t samples = 12);
Section section(const RuledSurface& s, const HPlane3& pi, std::size_t samples = 12);

struct HexagonResult {
  std::array<HPoint2, 3> points;
  bool collinear;
};

/// P_i = (A_j∨B_k) ∧ (A_k∨B_j) with B on a0 and A on b0.
/// Throws DegenerateHexagon.
HexagonResult pappus_check(const HLine2& a0, const HLine2& b0, const std::array<HPoint2, 3>& b,
                           const std::array<HPoint2, 3>& a);
/// Meets of opposite sides of a hexagon inscribed in a harmonic curve.
HexagonResult pascal_check(const HarmonicCurve& curve, const std::array<HPoint2, 6>& z);

/// Eight lines a0..a3, b0..b3 over a Pappus configuration in a plane π:
/// a1, a2 lifted through A1, A2; b_j the transversal through B_j to a1, a2;
/// a3 the rule of R(b0, b1, b2) through A3.
struct PappusWitness {
  PlaneChart chart;
  std::array<PluckerLine, 4> a, b;
  std::array<HPoint2, 3> pappus_points;
  bool pappus_collinear;
};

/// a0 = B1∨B2 and b0 = A1∨A2 in the chart; B3 may be displaced off a0 to
/// produce a perturbed b3. Throws DegenerateConfiguration.
PappusWitness pappus_witness(const PlaneChart& chart, const std::array<HPoint2, 3>& a,
                             const std::array<HPoint2, 3>& b);

/// a3 meets b3.
bool equipal_from_pappus_witness(const PappusWitness& w);

/// ((a1∧b1) ∨ (a2∧b2) ∨ (a3∧b3)) ∧ π, pulled back to the chart.
HLine2 pappus_line_from_witness(const PappusWitness& w);

/// W = ℓ1 ∧ ℓ2 and its two three-plane descriptions.
struct WPoint {
  HPoint3 w, via_a3, via_b3;
};
WPoint pappus_w_point(const PappusWitness& w);

}  // namespace harmonia
