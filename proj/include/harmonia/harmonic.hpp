#pragma once

// Quadrangles, the harmonic fourth construction, harmonic sets and pencils,
// and harmonic reflections (harmonic homologies).
//
// Every construction here refuses fields of characteristic 2, where the
// harmonic conjugate of a point is the point itself.

#include <array>
#include <optional>

#include "harmonia/projective.hpp"

namespace harmonia {

/// Throws CharacteristicTwo for GF(2).
void require_odd_characteristic(Field f);

/// Four points in general position with the dihedral order A, C, B, D.
/// Sides are A∨C, C∨B, B∨D, D∨A; diagonals are A∨B and C∨D.
class Quadrangle {
 public:
  Quadrangle(HPoint2 a, HPoint2 c, HPoint2 b, HPoint2 d);

  const HPoint2& a() const { return v_[0]; }
  const HPoint2& c() const { return v_[1]; }
  const HPoint2& b() const { return v_[2]; }
  const HPoint2& d() const { return v_[3]; }
  /// Vertex in dihedral position i (0..3): A, C, B, D.
  const HPoint2& vertex(int i) const { return v_[static_cast<std::size_t>(i & 3)]; }
  const std::array<HPoint2, 4>& vertices() const { return v_; }

  std::array<HLine2, 4> sides() const;
  std::array<HLine2, 2> diagonals() const;
  HPoint2 center() const;
  std::array<HPoint2, 2> diagonal_points() const;
  HLine2 horizon() const;

 private:
  std::array<HPoint2, 4> v_;
};

/// Harmonic conjugate D of C with respect to A and B, built from the
/// quadrangle determined by two auxiliary points collinear with C.
/// C may equal A or B, in which case D = C.
HPoint2 harmonic_fourth(const HPoint2& a, const HPoint2& c, const HPoint2& b, const HPoint2& aux1,
                        const HPoint2& aux2);

/// As above with the auxiliary points picked deterministically: the first
/// reference point off A∨B, then the sum of its coordinates with C's.
HPoint2 harmonic_fourth(const HPoint2& a, const HPoint2& c, const HPoint2& b);

/// Dual construction for three concurrent lines.
HLine2 harmonic_fourth(const HLine2& a, const HLine2& c, const HLine2& b);

/// Cross-ratio (A, B; C, D) of four collinear homogeneous vectors, computed
/// from 2x2 brackets in a coordinate pair where A and B are independent.
/// nullopt stands for the value infinity.
template <std::size_t N>
std::optional<Scalar> cross_ratio_vectors(const Vec<N>& a, const Vec<N>& b, const Vec<N>& c, const Vec<N>& d);

std::optional<Scalar> cross_ratio(const HPoint2& a, const HPoint2& b, const HPoint2& c, const HPoint2& d);
std::optional<Scalar> cross_ratio(const HPoint3& a, const HPoint3& b, const HPoint3& c, const HPoint3& d);

/// The points A, C, B, D are a harmonic set (A, B one pair; C, D the other).
bool is_harmonic_set(const HPoint2& a, const HPoint2& c, const HPoint2& b, const HPoint2& d);
/// Four concurrent lines a, c, b, d are a harmonic pencil.
bool is_harmonic_pencil(const HLine2& a, const HLine2& c, const HLine2& b, const HLine2& d);

/// Harmonic conjugate of c with respect to a, b for vectors of any length
/// (c = s a + t b maps to s a - t b). Analytic route, used in space.
template <std::size_t N>
Vec<N> harmonic_conjugate_vector(const Vec<N>& a, const Vec<N>& b, const Vec<N>& c);

HPoint3 harmonic_conjugate(const HPoint3& a, const HPoint3& b, const HPoint3& c);

/// Involution of the line A∨B fixing A and B.
class LineReflection {
 public:
  LineReflection(HPoint2 a, HPoint2 b);
  const HLine2& line() const { return line_; }
  /// Throws ArgumentOffLine for points off A∨B.
  HPoint2 operator()(const HPoint2& x) const;

 private:
  HPoint2 a_, b_;
  HLine2 line_;
};

inline LineReflection harmonic_reflection_on_line(const HPoint2& a, const HPoint2& b) { return LineReflection(a, b); }

/// Harmonic reflection with center c and mirror m: -1 on c, +1 on m.
/// Throws IncidentCenterMirror when c lies on m.
Collineation2 harmonic_reflection(const HPoint2& center, const HLine2& mirror);
Collineation3 harmonic_reflection(const HPoint3& center, const HPlane3& mirror);

/// {id, ρ(A,a), ρ(B,b), ρ(C,c)} for a triangle with opposite sides a, b, c.
std::array<Collineation2, 4> klein_triangle(const HPoint2& a_pt, const HLine2& a_side, const HPoint2& b_pt,
                                            const HLine2& b_side, const HPoint2& c_pt, const HLine2& c_side);

// ---- template definitions --------------------------------------------------

template <std::size_t N>
std::optional<Scalar> cross_ratio_vectors(const Vec<N>& a, const Vec<N>& b, const Vec<N>& c, const Vec<N>& d) {
  if (!collinear_vectors<N>(a, b, c) || !collinear_vectors<N>(a, b, d))
    fail(ErrorCode::NotCollinear, "cross-ratio of non-collinear points");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      auto bracket = [&](const Vec<N>& x, const Vec<N>& y) { return x[i] * y[j] - x[j] * y[i]; };
      if (bracket(a, b).is_zero()) continue;
      Scalar num = bracket(a, c) * bracket(b, d);
      Scalar den = bracket(b, c) * bracket(a, d);
      if (den.is_zero()) {
        if (num.is_zero()) fail(ErrorCode::CoincidentPoints, "cross-ratio undefined");
        return std::nullopt;
      }
      return num / den;
    }
  fail(ErrorCode::CoincidentBase, "cross-ratio with A = B");
}

template <std::size_t N>
Vec<N> harmonic_conjugate_vector(const Vec<N>& a, const Vec<N>& b, const Vec<N>& c) {
  require_odd_characteristic(a[0].field());
  if (!collinear_vectors<N>(a, b, c)) fail(ErrorCode::NotCollinear, "harmonic conjugate off the line");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      Scalar ab = a[i] * b[j] - a[j] * b[i];
      if (ab.is_zero()) continue;
      // c = s a + t b by Cramer's rule in coordinates (i, j)
      Scalar s = (c[i] * b[j] - c[j] * b[i]) / ab;
      Scalar t = (a[i] * c[j] - a[j] * c[i]) / ab;
      return combine(s, a, -t, b);
    }
  fail(ErrorCode::CoincidentBase, "harmonic conjugate with A = B");
}

}  // namespace harmonia
