#pragma once

// Harmonic curves: the locus of centers of harmonic pencils through the
// vertices of a quadrangle, with tangents, the induced polarity, the
// tangential map and hyperbolic reflections.
//
// ConicMatrix is an analytic cross-check; the constructions themselves
// are the synthetic ones built from harmonic reflections.

#include <vector>

#include "harmonia/harmonic.hpp"

namespace harmonia {

/// Symmetric 3x3 form, rank 3. Z on the conic iff Zᵀ M Z = 0.
class ConicMatrix {
 public:
  /// Throws DegeneratePointSet if m is not symmetric of rank 3.
  explicit ConicMatrix(const Mat<3>& m);

  const Mat<3>& matrix() const { return m_; }
  Field field() const { return m_[0][0].field(); }
  Scalar value(const HPoint2& z) const;
  bool contains(const HPoint2& z) const { return value(z).is_zero(); }
  HLine2 polar(const HPoint2& p) const;
  HPoint2 pole(const HLine2& l) const;
  /// Second point where a line through z (on the conic) meets it; z itself
  /// when the line is tangent.
  HPoint2 second_intersection(const HLine2& l, const HPoint2& z) const;
  /// ρᵀ M ρ is proportional to M.
  bool invariant_under(const Collineation2& t) const;

  bool operator==(const ConicMatrix& o) const { return m_ == o.m_; }

 private:
  Mat<3> m_;
};

/// Conic through five points. Throws DegeneratePointSet when the points do
/// not determine a unique non-degenerate conic.
ConicMatrix conic_fit(const std::array<HPoint2, 5>& pts);

/// Tangent at vertex v (0..3 in the dihedral order A, C, B, D): the harmonic
/// conjugate of the diagonal through v with respect to the two sides at v.
HLine2 vertex_tangent(const Quadrangle& q, int v);

class HarmonicCurve;
/// Generator (1,0), (0,1), (-1,0), (0,-1): the unit circle.
HarmonicCurve inscribed_square(Field f = Field::rational());

class HarmonicCurve {
 public:
  explicit HarmonicCurve(Quadrangle generator);

  /// Curve through A and C tangent to a at A and b at B.
  static HarmonicCurve from_a_construction(const HPoint2& a_pt, const HLine2& a, const HPoint2& b_pt,
                                           const HLine2& b, const HPoint2& c_pt);
  /// Harmonic curve through three points of a conic, carrying its tangents.
  static HarmonicCurve from_conic(const ConicMatrix& m, const HPoint2& a, const HPoint2& b, const HPoint2& c);

  const Quadrangle& generator() const { return gen_; }
  /// Tangents at A, C, B, D.
  const std::array<HLine2, 4>& tangents() const { return tangents_; }
  Field field() const { return gen_.a().field(); }
  /// Q = a ∧ b, the pole of q.
  const HPoint2& pole_q() const { return pole_q_; }
  /// q = A ∨ B.
  const HLine2& q() const { return q_; }
  const ConicMatrix& conic() const { return conic_; }

  /// Z = (C∨X) ∧ (D∨Y) with Y = X·ρ(A,B). Throws ArgumentOffLine off q.
  HPoint2 hc_point(const HPoint2& x) const;
  /// Parameter point X = q ∧ (C∨Z) with hc_point(X) = Z.
  HPoint2 parameter_of(const HPoint2& z) const;
  /// Pencil Z∨A, Z∨C, Z∨B, Z∨D is harmonic (vertices are members).
  bool contains(const HPoint2& z) const;
  /// Throws NotOnCurve.
  HLine2 tangent_at(const HPoint2& z) const;

  HLine2 polar_of_point(const HPoint2& p) const { return conic_.polar(p); }
  HPoint2 pole_of_line(const HLine2& l) const { return conic_.pole(l); }
  /// ρ(P, polar P) keeps every sample on the curve. Throws PoleOnCurve.
  bool polar_reflection_invariance(const HPoint2& p, std::size_t samples = 20) const;

  /// X' = t ∧ x for tangents t at T and x at X; T' = T.
  HPoint2 tangential_map(const HPoint2& t, const HPoint2& x) const;
  /// Inverse of the tangential map: the second contact point of the
  /// tangents from X' on t.
  HPoint2 tangential_inverse(const HPoint2& t, const HPoint2& x_prime) const;

  /// η = ρ(pole(A∨B), A∨B).
  Collineation2 hyperbolic_reflection(const HPoint2& a, const HPoint2& b) const;

  /// Strict interior over Q (ZᵀMZ < 0 with det M < 0). Throws Unsupported
  /// over GF(p).
  bool interior(const HPoint2& z) const;

  /// Vertices followed by hc_point along ladder_points(A, B), deduplicated.
  std::vector<HPoint2> sample(std::size_t count) const;

 private:
  HarmonicCurve(Quadrangle generator, std::array<HLine2, 4> tangents);

  Quadrangle gen_;
  std::array<HLine2, 4> tangents_;
  HPoint2 pole_q_;
  HLine2 q_;
  ConicMatrix conic_;
};

/// Z = C·ρ(X, x) with x = (X·ρ(A,B)) ∨ (a∧b).
HPoint2 a_construction_point(const HPoint2& a_pt, const HLine2& a, const HPoint2& b_pt, const HLine2& b,
                             const HPoint2& c_pt, const HPoint2& x);

}  // namespace harmonia
