#pragma once

// PG(2, p) and PG(3, p) as dense incidence tables, with exhaustive checks of
// the incidence axioms and of the configuration theorems.
//
// Every exhaustive check comes in a serial and an OpenMP flavour. Both
// report the failing instance with the smallest outer index, so their
// results are identical.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harmonia/projective.hpp"

namespace harmonia {

struct Budget {
  std::uint32_t plane_p = 7;
  std::uint32_t space_p = 3;
  std::uint32_t pappus_p = 5;
  std::uint32_t equipal_p = 3;
};

enum class Exec { serial, parallel };

/// omp_get_max_threads(), capped by HARMONIA_THREADS when set.
int worker_count();

class FiniteGeometry {
 public:
  /// Canonical representatives (first nonzero coordinate 1) in
  /// lexicographic order. Throws NotPrime, BudgetExceeded.
  static FiniteGeometry enumerate(int dimension, std::uint32_t p, const Budget& budget = {});

  int dimension() const { return dim_; }
  std::uint32_t p() const { return p_; }
  Field field() const { return Field::prime(p_); }
  std::string name() const;

  std::size_t point_count() const { return points_.size(); }
  std::size_t line_count() const { return lines_.size(); }
  std::size_t plane_count() const { return planes_.size(); }

  /// Sorted point indices.
  const std::vector<std::uint32_t>& line(std::size_t l) const { return lines_[l]; }
  const std::vector<std::uint32_t>& plane(std::size_t pi) const { return planes_[pi]; }
  const std::vector<std::uint32_t>& coords(std::size_t i) const { return points_[i]; }

  HPoint2 point2(std::size_t i) const;
  HPoint3 point3(std::size_t i) const;
  std::optional<std::uint32_t> index_of(const HPoint2& p) const;
  std::optional<std::uint32_t> index_of(const HPoint3& p) const;

  bool on(std::size_t pt, std::size_t l) const { return inc_[pt * lines_.size() + l] != 0; }
  /// First line of the table through both points, -1 if none.
  int join(std::size_t a, std::size_t b) const { return join_[a * points_.size() + b]; }
  /// First common point of two lines, -1 if none. meet(l, l) = -1.
  int meet(std::size_t l, std::size_t m) const { return meet_[l * lines_.size() + m]; }
  /// Lines equal or sharing a point.
  bool lines_meet(std::size_t l, std::size_t m) const { return l == m || meet(l, m) >= 0; }

  /// Replaces point `drop` of line l by `add` and rebuilds join and meet.
  /// Fault injection only.
  void corrupt(std::size_t l, std::uint32_t drop, std::uint32_t add);

 private:
  FiniteGeometry(int dim, std::uint32_t p) : dim_(dim), p_(p) {}
  std::uint32_t code(const std::vector<std::uint32_t>& c) const;
  void rebuild();

  int dim_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> points_;
  std::vector<std::int32_t> by_code_;
  std::vector<std::vector<std::uint32_t>> lines_, planes_;
  std::vector<std::uint8_t> inc_;
  std::vector<std::int32_t> join_, meet_;
};

enum class Status { pass, fail, not_applicable };
std::string_view to_string(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::pass;
  std::uint64_t instances = 0;
  std::vector<std::int64_t> witness;
  std::string detail;

  bool ok() const { return status != Status::fail; }
};

/// Harmonic fourth on the tables: P1 off A∨B, P2 on A∨P1, P3 =
/// (C∨P1)∧(B∨P2), P4 = (A∨P3)∧(B∨P1), D = (P2∨P4)∧(A∨B).
struct TableFourth {
  std::int64_t d;
  std::array<std::int64_t, 4> quadrangle;
};
/// nullopt when the tables lack a join or meet on the way.
std::optional<TableFourth> table_harmonic_fourth(const FiniteGeometry& g, std::uint32_t a, std::uint32_t c,
                                                 std::uint32_t b, std::uint32_t p1, std::uint32_t p2);
/// First admissible auxiliaries in index order.
std::optional<TableFourth> table_harmonic_fourth(const FiniteGeometry& g, std::uint32_t a, std::uint32_t c,
                                                 std::uint32_t b);

/// Axioms 1..5 in order; axiom 3 is not applicable in a plane.
std::vector<CheckResult> check_axioms(const FiniteGeometry& g, Exec exec = Exec::parallel);
CheckResult check_axiom(const FiniteGeometry& g, int axiom, Exec exec = Exec::parallel);

/// Every hexagon with vertices alternately on two lines, off their meet.
/// Throws DimensionMismatch, BudgetExceeded.
CheckResult pappus_exhaustive(const FiniteGeometry& g, Exec exec = Exec::parallel, const Budget& budget = {});

/// For every skew triple, the transversals of any three of its transversals
/// are the same set and contain the triple. Throws DimensionMismatch,
/// BudgetExceeded.
CheckResult equipal_exhaustive(const FiniteGeometry& g, Exec exec = Exec::parallel, const Budget& budget = {});
/// The same closure for one skew triple of line indices.
CheckResult equipal_instance(const FiniteGeometry& g, std::uint32_t a, std::uint32_t b, std::uint32_t c);

/// Harmonic fourth unchanged over all auxiliary choices, for every
/// collinear triple.
CheckResult harmonic_independence_exhaustive(const FiniteGeometry& g, Exec exec = Exec::parallel);
/// Klein four-group and orbit diagonal triangle for every triangle.
/// Plane only, odd p.
CheckResult klein_exhaustive(const FiniteGeometry& g, Exec exec = Exec::parallel);
/// ρ(X, Y∨Q) = ρ(Q, q)·ρ(Y, X∨Q) and Z on its tangent for every
/// quadrangle and every X on q other than A, B. Plane only, odd p.
CheckResult duality_exhaustive(const FiniteGeometry& g, Exec exec = Exec::parallel);

/// Harmonic sequence 0, 1, 2, ... on y = 0, each point the conjugate of
/// the one two steps back with respect to the previous one and the ideal
/// point. characteristic is the return period to 0, or 0 when the sequence
/// does not return within the budget.
struct ProbeResult {
  std::uint32_t characteristic;
  std::size_t steps;
};
/// Synthetic harmonic fourth over the field. Throws CharacteristicTwo.
ProbeResult characteristic_probe(Field f, std::size_t budget = 50);
/// Table harmonic fourth; a degenerate fourth in characteristic 2 closes
/// the sequence after two steps.
ProbeResult characteristic_probe(const FiniteGeometry& g, std::size_t budget = 50);

}  // namespace harmonia
