#include "harmonia/linalg.hpp"

namespace harmonia {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> rows, std::size_t cols, Field f) {
  auto pivots = rref(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols, Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(std::vector<std::vector<Scalar>> rows, std::size_t cols) { return rref(rows, cols).size(); }

Field common_field(std::span<const Scalar> v) {
  Field f = v.front().field();
  for (const auto& x : v)
    if (!(x.field() == f)) fail(ErrorCode::FieldMismatch, "mixed fields in one element");
  return f;
}

void canonicalize(std::span<Scalar> v) {
  Field f = common_field(v);
  std::size_t first = 0;
  while (first < v.size() && v[first].is_zero()) ++first;
  if (first == v.size()) fail(ErrorCode::ZeroVector, "all coordinates are zero");
  if (!f.is_rational()) {
    Scalar inv = v[first].inverse();
    for (auto& x : v) x *= inv;
    return;
  }
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, mpz_class(x.rational().get_den()));
  mpz_class g = 0;
  std::vector<mpz_class> nums;
  nums.reserve(v.size());
  for (const auto& x : v) {
    mpz_class n = x.rational().get_num() * (den / x.rational().get_den());
    g = gcd(g, n);
    nums.push_back(std::move(n));
  }
  if (sgn(nums[first]) < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Scalar(mpq_class(nums[i] / g));
}

}  // namespace harmonia
