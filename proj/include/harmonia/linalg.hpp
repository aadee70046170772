#pragma once

// Small exact vectors and matrices over Scalar, plus an exact nullspace
// solver used by the conic and quadric fits.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "harmonia/field.hpp"

namespace harmonia {

template <std::size_t N>
using Vec = std::array<Scalar, N>;

template <std::size_t N>
using Mat = std::array<std::array<Scalar, N>, N>;

template <std::size_t N>
Vec<N> zero_vec(Field f) {
  Vec<N> v;
  v.fill(Scalar::zero(f));
  return v;
}

template <std::size_t N>
Vec<N> int_vec(Field f, const std::array<long, N>& xs) {
  Vec<N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = Scalar(f, xs[i]);
  return v;
}

template <std::size_t N>
bool is_zero(const Vec<N>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <std::size_t N>
Scalar dot(const Vec<N>& a, const Vec<N>& b) {
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <std::size_t N>
Vec<N> add(const Vec<N>& a, const Vec<N>& b) {
  Vec<N> r = a;
  for (std::size_t i = 0; i < N; ++i) r[i] += b[i];
  return r;
}

template <std::size_t N>
Vec<N> scale(const Scalar& k, const Vec<N>& a) {
  Vec<N> r = a;
  for (auto& x : r) x *= k;
  return r;
}

/// k1*a + k2*b
template <std::size_t N>
Vec<N> combine(const Scalar& k1, const Vec<N>& a, const Scalar& k2, const Vec<N>& b) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = k1 * a[i] + k2 * b[i];
  return r;
}

inline Vec<3> cross(const Vec<3>& a, const Vec<3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Scalar det3(const Vec<3>& a, const Vec<3>& b, const Vec<3>& c) { return dot(a, cross(b, c)); }

/// Generalized cross product in 4 dimensions: the covector orthogonal to a, b, c.
inline Vec<4> cross4(const Vec<4>& a, const Vec<4>& b, const Vec<4>& c) {
  Vec<4> r;
  for (std::size_t i = 0; i < 4; ++i) {
    Vec<3> ra, rb, rc;
    std::size_t k = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == i) continue;
      ra[k] = a[j];
      rb[k] = b[j];
      rc[k] = c[j];
      ++k;
    }
    Scalar m = det3(ra, rb, rc);
    r[i] = (i % 2 == 0) ? m : -m;
  }
  return r;
}

template <std::size_t N>
Mat<N> identity_mat(Field f) {
  Mat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m[i][j] = Scalar(f, i == j ? 1 : 0);
  return m;
}

template <std::size_t N>
Vec<N> mul(const Mat<N>& m, const Vec<N>& v) {
  Vec<N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = dot(m[i], v);
  return r;
}

template <std::size_t N>
Mat<N> mul(const Mat<N>& a, const Mat<N>& b) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Scalar s = a[i][0] * b[0][j];
      for (std::size_t k = 1; k < N; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

template <std::size_t N>
Mat<N> transpose(const Mat<N>& m) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = m[j][i];
  return r;
}

/// Exact determinant by Gaussian elimination on a copy.
template <std::size_t N>
Scalar det(Mat<N> m) {
  Field f = m[0][0].field();
  Scalar result = Scalar::one(f);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    while (pivot < N && m[pivot][col].is_zero()) ++pivot;
    if (pivot == N) return Scalar::zero(f);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      result = -result;
    }
    result *= m[col][col];
    Scalar inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < N; ++r) {
      if (m[r][col].is_zero()) continue;
      Scalar k = m[r][col] * inv;
      for (std::size_t c = col; c < N; ++c) m[r][c] -= k * m[col][c];
    }
  }
  return result;
}

/// Classical adjugate: adj(M) * M = det(M) * I.
template <std::size_t N>
Mat<N> adjugate(const Mat<N>& m) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Mat<N - 1> minor;
      std::size_t ri = 0;
      for (std::size_t a = 0; a < N; ++a) {
        if (a == j) continue;
        std::size_t ci = 0;
        for (std::size_t b = 0; b < N; ++b) {
          if (b == i) continue;
          minor[ri][ci++] = m[a][b];
        }
        ++ri;
      }
      Scalar c = det<N - 1>(minor);
      r[i][j] = ((i + j) % 2 == 0) ? c : -c;
    }
  return r;
}

template <std::size_t N>
std::size_t rank(Mat<N> m);

/// Row-reduces `rows` (each of length `cols`) and returns a basis of the
/// right nullspace.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, std::size_t cols, Field f);
std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows, std::size_t cols);

template <std::size_t N>
std::size_t rank(Mat<N> m) {
  std::vector<std::vector<Scalar>> rows;
  for (auto& row : m) rows.emplace_back(row.begin(), row.end());
  return matrix_rank(std::move(rows), N);
}

/// Scales v so it is a canonical representative of its projective class:
/// over Q integer-cleared, gcd 1, first nonzero entry positive; over GF(p)
/// first nonzero entry equal to 1. Throws ZeroVector on the zero vector.
void canonicalize(std::span<Scalar> v);

/// Field shared by every entry; throws FieldMismatch otherwise.
Field common_field(std::span<const Scalar> v);

}  // namespace harmonia
