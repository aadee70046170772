#pragma once

// Homogeneous models of the projective plane and projective space.
//
// Every element is stored in canonical form (see canonicalize), so
// projective equality is plain structural equality. Lines of space are
// Plücker 6-vectors (p01, p02, p03, p12, p13, p23) with p_ij = x_i y_j - x_j y_i
// for two spanning points x, y.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "harmonia/linalg.hpp"

namespace harmonia {

struct Point2Tag {};
struct Line2Tag {};
struct Point3Tag {};
struct Plane3Tag {};
struct PluckerTag {
  static void validate(const Vec<6>& p);
};

template <std::size_t N, class Tag>
class Homogeneous {
 public:
  static constexpr std::size_t size = N;

  explicit Homogeneous(Vec<N> coords) : c_(std::move(coords)) {
    canonicalize(c_);
    if constexpr (requires { Tag::validate(c_); }) Tag::validate(c_);
  }

  static Homogeneous from_ints(const std::array<long, N>& xs, Field f = Field::rational()) {
    return Homogeneous(int_vec<N>(f, xs));
  }

  const Vec<N>& coords() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Field field() const { return c_[0].field(); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < N; ++i) {
      if (i) s += ':';
      s += c_[i].to_string();
    }
    return s + "]";
  }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }

 private:
  Vec<N> c_;
};

using HPoint2 = Homogeneous<3, Point2Tag>;
using HLine2 = Homogeneous<3, Line2Tag>;
using HPoint3 = Homogeneous<4, Point3Tag>;
using HPlane3 = Homogeneous<4, Plane3Tag>;
using PluckerLine = Homogeneous<6, PluckerTag>;

/// Affine point (x, y) as [x : y : 1].
HPoint2 affine_point(const Scalar& x, const Scalar& y);
HPoint3 affine_point(const Scalar& x, const Scalar& y, const Scalar& z);
/// Affine line a x + b y + c = 0.
HLine2 affine_line(const Scalar& a, const Scalar& b, const Scalar& c);

// ---- plane -----------------------------------------------------------------

bool incident(const HPoint2& p, const HLine2& l);
/// Throws CoincidentArguments when p == q.
HLine2 join(const HPoint2& p, const HPoint2& q);
/// Throws CoincidentArguments when l == m.
HPoint2 meet(const HLine2& l, const HLine2& m);
bool collinear(const HPoint2& a, const HPoint2& b, const HPoint2& c);
bool concurrent(const HLine2& a, const HLine2& b, const HLine2& c);

/// No three collinear (3 or 4 points).
bool in_general_position(std::span<const HPoint2> pts);
/// No three concurrent (3 or 4 lines).
bool in_general_position(std::span<const HLine2> lines);

// ---- space -----------------------------------------------------------------

bool incident(const HPoint3& p, const HPlane3& pi);
bool incident(const HPoint3& p, const PluckerLine& l);
bool incident(const PluckerLine& l, const HPlane3& pi);

/// Throws DegenerateSpan when p == q.
PluckerLine join(const HPoint3& p, const HPoint3& q);
/// Throws LineInPlane when l lies in pi.
HPoint3 meet(const PluckerLine& l, const HPlane3& pi);
/// Throws PointOnLine when p lies on l.
HPlane3 join(const PluckerLine& l, const HPoint3& p);
/// Throws CoincidentArguments when the planes coincide.
PluckerLine meet(const HPlane3& a, const HPlane3& b);
/// Throws DegenerateSpan when the points are collinear.
HPlane3 join(const HPoint3& a, const HPoint3& b, const HPoint3& c);
/// Throws DegenerateSpan when the planes share a line.
HPoint3 meet(const HPlane3& a, const HPlane3& b, const HPlane3& c);

/// Bilinear Plücker pairing; zero iff the lines are coplanar.
Scalar plucker_pairing(const PluckerLine& l, const PluckerLine& m);
bool lines_coplanar(const PluckerLine& l, const PluckerLine& m);
/// Common point of two coplanar lines. Throws CoincidentLines / NotCoplanar.
HPoint3 meet(const PluckerLine& l, const PluckerLine& m);
/// Plane spanned by two distinct coplanar lines.
HPlane3 join(const PluckerLine& l, const PluckerLine& m);
/// Two distinct points spanning l.
std::pair<HPoint3, HPoint3> points_on(const PluckerLine& l);
/// The point u + t v for the spanning points of l; t = nullopt gives v.
HPoint3 point_on(const PluckerLine& l, const std::optional<Scalar>& t);

/// Pairwise skew (3 or more lines).
bool in_general_position(std::span<const PluckerLine> lines);

/// Collinearity of homogeneous vectors of any length (rank <= 2).
template <std::size_t N>
bool collinear_vectors(const Vec<N>& a, const Vec<N>& b, const Vec<N>& c) {
  std::vector<std::vector<Scalar>> rows{{a.begin(), a.end()}, {b.begin(), b.end()}, {c.begin(), c.end()}};
  return matrix_rank(std::move(rows), N) <= 2;
}

inline bool collinear(const HPoint3& a, const HPoint3& b, const HPoint3& c) {
  return collinear_vectors<4>(a.coords(), b.coords(), c.coords());
}

// ---- sampling ladders -------------------------------------------------------

/// Deterministic parameter values: over Q 0, 1, -1, 2, -2, 1/2, -1/2, 3, ...
/// in order of height; over GF(p) 0, 1, ..., p-1.
std::vector<Scalar> parameter_ladder(Field f, std::size_t count);

/// Points u + t v along the ladder, followed by v itself over GF(p), so the
/// full line is covered there.
template <class E>
std::vector<E> ladder_points(const E& u, const E& v, std::size_t count) {
  std::vector<E> out;
  Field f = u.field();
  Scalar one = Scalar::one(f);
  for (const auto& t : parameter_ladder(f, count)) out.emplace_back(combine(one, u.coords(), t, v.coords()));
  if (!f.is_rational() && out.size() < count) out.push_back(v);
  return out;
}

// ---- collineations ---------------------------------------------------------

/// Invertible homogeneous matrix acting on column vectors of point
/// coordinates. Equal up to a nonzero scalar factor.
template <std::size_t N>
class Collineation {
 public:
  explicit Collineation(Mat<N> m);
  static Collineation identity(Field f) { return Collineation(identity_mat<N>(f)); }

  const Mat<N>& matrix() const { return m_; }
  Field field() const { return m_[0][0].field(); }

  /// Apply `this` first, then `next`.
  Collineation then(const Collineation& next) const { return Collineation(mul(next.m_, m_)); }
  Collineation inverse() const { return Collineation(adjugate(m_)); }
  bool is_identity() const { return *this == identity(field()); }

  std::string to_string() const;

  friend bool operator==(const Collineation& a, const Collineation& b) { return a.m_ == b.m_; }

 private:
  Mat<N> m_;
};

using Collineation2 = Collineation<3>;
using Collineation3 = Collineation<4>;

HPoint2 apply(const Collineation2& t, const HPoint2& p);
HLine2 apply(const Collineation2& t, const HLine2& l);
HPoint3 apply(const Collineation3& t, const HPoint3& p);
HPlane3 apply(const Collineation3& t, const HPlane3& pi);
PluckerLine apply(const Collineation3& t, const PluckerLine& l);

}  // namespace harmonia
