#include "harmonia/finite.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "harmonia/curve.hpp"
#include "harmonia/harmonic.hpp"

namespace harmonia {

namespace {

constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1;
  for (std::uint32_t e = p - 2, b = a; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

std::vector<std::vector<std::uint32_t>> canonical_vectors(std::size_t n, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::size_t free = n - lead - 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= p;
    for (std::size_t k = 0; k < total; ++k) {
      std::vector<std::uint32_t> v(n, 0);
      v[lead] = 1;
      std::size_t rest = k;
      for (std::size_t i = n; i-- > lead + 1;) {
        v[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> v, std::uint32_t p) {
  auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  std::uint32_t inv = mod_inverse(*lead, p);
  for (auto& x : v) x = x * inv % p;
  return v;
}

bool orthogonal(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b, std::uint32_t p) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s % p == 0;
}

// Runs body(i) for i in [0, n) and returns the smallest failing index.
// body returns true on success.
template <class Body>
std::size_t first_failure(std::size_t n, Exec exec, Body body) {
  std::size_t worst = kNoFailure;
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i)
      if (!body(i)) return i;
    return worst;
  }
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count()) reduction(min : worst)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (static_cast<std::size_t>(i) > worst) continue;
    if (!body(static_cast<std::size_t>(i))) worst = std::min(worst, static_cast<std::size_t>(i));
  }
  return worst;
}

// Instances up to and including the first failure, identical in serial and
// parallel runs.
std::uint64_t sum_upto(const std::vector<std::uint64_t>& xs, std::size_t at) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < xs.size() && i <= at; ++i) s += xs[i];
  return s;
}

CheckResult result(std::string id, std::uint64_t instances) {
  CheckResult r;
  r.id = std::move(id);
  r.instances = instances;
  return r;
}

void require_plane(const FiniteGeometry& g, const char* what) {
  if (g.dimension() != 2) fail(ErrorCode::DimensionMismatch, std::string(what) + " needs a plane");
}

std::vector<std::uint32_t> points_off_line(const FiniteGeometry& g, std::size_t l) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < g.point_count(); ++i)
    if (!g.on(i, l)) out.push_back(i);
  return out;
}

// ---- axioms ----------------------------------------------------------------

CheckResult axiom1(const FiniteGeometry& g, Exec exec) {
  auto r = result("axiom-1", 0);
  const std::size_t n = g.point_count();
  std::vector<std::int64_t> bad_b(n, -1);
  auto at = first_failure(n, exec, [&](std::size_t a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      int count = 0;
      for (std::size_t l = 0; l < g.line_count(); ++l) count += g.on(a, l) && g.on(b, l);
      if (count != 1) {
        bad_b[a] = static_cast<std::int64_t>(b);
        return false;
      }
    }
    return true;
  });
  r.instances = n * (n - 1) / 2;
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = {static_cast<std::int64_t>(at), bad_b[at]};
    r.detail = "points without a unique common line";
  }
  return r;
}

CheckResult axiom2(const FiniteGeometry& g, Exec exec) {
  auto r = result("axiom-2", 0);
  const std::size_t n = g.point_count();
  std::vector<std::array<std::int64_t, 3>> bad(n);
  std::vector<std::uint64_t> counts(n, 0);
  auto at = first_failure(n, exec, [&](std::size_t a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      int ab = g.join(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        int ac = g.join(a, c);
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          ++counts[a];
          int cd = g.join(c, d), bd = g.join(b, d);
          if (ab < 0 || cd < 0 || ac < 0 || bd < 0) {
            bad[a] = {static_cast<std::int64_t>(b), static_cast<std::int64_t>(c), static_cast<std::int64_t>(d)};
            return false;
          }
          if (g.lines_meet(ab, cd) && !g.lines_meet(ac, bd)) {
            bad[a] = {static_cast<std::int64_t>(b), static_cast<std::int64_t>(c), static_cast<std::int64_t>(d)};
            return false;
          }
        }
      }
    }
    return true;
  });
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = {static_cast<std::int64_t>(at), bad[at][0], bad[at][1], bad[at][2]};
    r.detail = "A∨B meets C∨D but A∨C misses B∨D";
  }
  r.instances = sum_upto(counts, at);
  return r;
}

CheckResult axiom3(const FiniteGeometry& g) {
  auto r = result("axiom-3", 0);
  if (g.dimension() == 2) {
    r.status = Status::not_applicable;
    r.detail = "planar model";
    return r;
  }
  for (std::size_t l = 0; l < g.line_count(); ++l)
    for (std::size_t m = l + 1; m < g.line_count(); ++m) {
      ++r.instances;
      if (!g.lines_meet(l, m)) {
        r.witness = {static_cast<std::int64_t>(l), static_cast<std::int64_t>(m)};
        r.detail = "skew lines";
        return r;
      }
    }
  r.status = Status::fail;
  r.detail = "every two lines meet";
  return r;
}

CheckResult axiom4(const FiniteGeometry& g) {
  auto r = result("axiom-4", g.line_count());
  for (std::size_t l = 0; l < g.line_count(); ++l)
    if (g.line(l).size() < 3) {
      r.status = Status::fail;
      r.witness = {static_cast<std::int64_t>(l)};
      r.detail = "line with fewer than three points";
      return r;
    }
  return r;
}

CheckResult axiom5(const FiniteGeometry& g, Exec exec) {
  auto r = result("axiom-5", 0);
  const std::size_t lines = g.line_count();
  std::vector<std::vector<std::int64_t>> bad(lines);
  std::vector<std::uint64_t> counts(lines, 0);
  auto at = first_failure(lines, exec, [&](std::size_t l) {
    const auto& pts = g.line(l);
    for (auto a : pts)
      for (auto c : pts)
        for (auto b : pts) {
          if (a == c || a == b || c == b) continue;
          if (static_cast<std::size_t>(g.join(a, b)) != l) continue;
          ++counts[l];
          auto h = table_harmonic_fourth(g, a, c, b);
          if (!h) {
            bad[l] = {a, c, b, -1};
            return false;
          }
          if (h->d == a || h->d == b || h->d == c) {
            bad[l] = {a, c, b, h->d, h->quadrangle[0], h->quadrangle[1], h->quadrangle[2], h->quadrangle[3]};
            return false;
          }
        }
    return true;
  });
  r.instances = sum_upto(counts, at);
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = bad[at];
    r.detail = "harmonic fourth coincides with an argument";
    if (r.witness.size() == 8 && r.witness[3] == r.witness[1]) {
      const auto& w = r.witness;
      int e = g.meet(g.join(w[4], w[6]), g.join(w[5], w[7]));
      r.witness.push_back(e);
      if (e >= 0 && g.on(e, g.join(w[0], w[2])))
        r.detail = "harmonic fourth of A, C, B is C; diagonal points A, B, E of P1P2P3P4 are collinear (Fano)";
    }
  }
  return r;
}

int line_of(const FiniteGeometry& g, std::int64_t x, std::int64_t y) {
  if (x < 0 || y < 0 || x == y) return -1;
  return g.join(x, y);
}

int point_of(const FiniteGeometry& g, int l, int m) {
  if (l < 0 || m < 0 || l == m) return -1;
  return g.meet(l, m);
}

std::vector<std::uint32_t> transversals(const FiniteGeometry& g, const std::vector<std::vector<std::uint32_t>>& nbr,
                                        std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  std::vector<std::uint32_t> out;
  for (auto m : nbr[a])
    if (m != b && m != c && g.lines_meet(m, b) && g.lines_meet(m, c)) out.push_back(m);
  return out;
}

std::vector<std::vector<std::uint32_t>> neighbours(const FiniteGeometry& g) {
  std::vector<std::vector<std::uint32_t>> nbr(g.line_count());
  for (std::uint32_t l = 0; l < g.line_count(); ++l)
    for (std::uint32_t m = 0; m < g.line_count(); ++m)
      if (m != l && g.lines_meet(l, m)) nbr[l].push_back(m);
  return nbr;
}

// Empty on success, otherwise the witness.
std::vector<std::int64_t> equipal_closure(const FiniteGeometry& g, const std::vector<std::vector<std::uint32_t>>& nbr,
                                          std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  auto t = transversals(g, nbr, a, b, c);
  if (t.size() < 3) return {a, b, c, -1};
  std::vector<std::uint32_t> first;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      for (std::size_t k = j + 1; k < t.size(); ++k) {
        auto r = transversals(g, nbr, t[i], t[j], t[k]);
        bool holds = std::find(r.begin(), r.end(), a) != r.end() && std::find(r.begin(), r.end(), b) != r.end() &&
                     std::find(r.begin(), r.end(), c) != r.end();
        if (first.empty()) first = r;
        if (!holds || r != first) return {a, b, c, t[i], t[j], t[k]};
      }
  return {};
}

}  // namespace

int worker_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("HARMONIA_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min<long>(n, cap);
  }
  return std::max(n, 1);
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::not_applicable:
      return "n/a";
  }
  return "?";
}

// ---- enumeration -----------------------------------------------------------

FiniteGeometry FiniteGeometry::enumerate(int dimension, std::uint32_t p, const Budget& budget) {
  if (dimension != 2 && dimension != 3) fail(ErrorCode::ConfigInvalid, "dimension must be 2 or 3");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::uint32_t cap = dimension == 2 ? budget.plane_p : budget.space_p;
  if (p > cap) fail(ErrorCode::BudgetExceeded, "p = " + std::to_string(p) + " exceeds the budget " + std::to_string(cap));

  FiniteGeometry g(dimension, p);
  const std::size_t n = static_cast<std::size_t>(dimension) + 1;
  g.points_ = canonical_vectors(n, p);
  std::size_t codes = 1;
  for (std::size_t i = 0; i < n; ++i) codes *= p;
  g.by_code_.assign(codes, -1);
  for (std::size_t i = 0; i < g.points_.size(); ++i) g.by_code_[g.code(g.points_[i])] = static_cast<std::int32_t>(i);

  auto duals = canonical_vectors(n, p);
  auto incident_points = [&](const std::vector<std::uint32_t>& h) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < g.points_.size(); ++i)
      if (orthogonal(h, g.points_[i], p)) out.push_back(i);
    return out;
  };
  if (dimension == 2) {
    for (const auto& h : duals) g.lines_.push_back(incident_points(h));
  } else {
    for (const auto& h : duals) g.planes_.push_back(incident_points(h));
    const std::size_t np = g.points_.size();
    std::vector<std::uint8_t> covered(np * np, 0);
    auto pairs = canonical_vectors(2, p);
    for (std::size_t i = 0; i < np; ++i)
      for (std::size_t j = i + 1; j < np; ++j) {
        if (covered[i * np + j]) continue;
        std::vector<std::uint32_t> pts;
        for (const auto& st : pairs) {
          std::vector<std::uint32_t> v(n);
          for (std::size_t k = 0; k < n; ++k) v[k] = (st[0] * g.points_[i][k] + st[1] * g.points_[j][k]) % p;
          pts.push_back(static_cast<std::uint32_t>(g.by_code_[g.code(normalized(v, p))]));
        }
        std::sort(pts.begin(), pts.end());
        for (auto x : pts)
          for (auto y : pts) covered[x * np + y] = 1;
        g.lines_.push_back(std::move(pts));
      }
  }
  g.rebuild();
  return g;
}

std::string FiniteGeometry::name() const { return "PG(" + std::to_string(dim_) + "," + std::to_string(p_) + ")"; }

std::uint32_t FiniteGeometry::code(const std::vector<std::uint32_t>& c) const {
  std::uint32_t k = 0;
  for (auto x : c) k = k * p_ + x;
  return k;
}

void FiniteGeometry::rebuild() {
  const std::size_t np = points_.size(), nl = lines_.size();
  inc_.assign(np * nl, 0);
  join_.assign(np * np, -1);
  meet_.assign(nl * nl, -1);
  std::vector<std::vector<std::uint32_t>> through(np);
  for (std::size_t l = 0; l < nl; ++l)
    for (auto x : lines_[l]) {
      inc_[x * nl + l] = 1;
      through[x].push_back(static_cast<std::uint32_t>(l));
    }
  for (std::size_t l = 0; l < nl; ++l)
    for (auto x : lines_[l])
      for (auto y : lines_[l])
        if (x != y && join_[x * np + y] < 0) join_[x * np + y] = static_cast<std::int32_t>(l);
  for (std::size_t x = 0; x < np; ++x)
    for (auto l : through[x])
      for (auto m : through[x])
        if (l != m && meet_[l * nl + m] < 0) meet_[l * nl + m] = static_cast<std::int32_t>(x);
}

void FiniteGeometry::corrupt(std::size_t l, std::uint32_t drop, std::uint32_t add) {
  auto& pts = lines_.at(l);
  auto it = std::find(pts.begin(), pts.end(), drop);
  if (it == pts.end() || add >= points_.size()) fail(ErrorCode::ConfigInvalid, "corruption must replace a point of the line");
  *it = add;
  std::sort(pts.begin(), pts.end());
  rebuild();
}

HPoint2 FiniteGeometry::point2(std::size_t i) const {
  if (dim_ != 2) fail(ErrorCode::DimensionMismatch, "point2 on a space");
  const auto& c = points_.at(i);
  return HPoint2::from_ints({long(c[0]), long(c[1]), long(c[2])}, field());
}

HPoint3 FiniteGeometry::point3(std::size_t i) const {
  if (dim_ != 3) fail(ErrorCode::DimensionMismatch, "point3 on a plane");
  const auto& c = points_.at(i);
  return HPoint3::from_ints({long(c[0]), long(c[1]), long(c[2]), long(c[3])}, field());
}

std::optional<std::uint32_t> FiniteGeometry::index_of(const HPoint2& p) const {
  if (dim_ != 2 || !(p.field() == field())) return std::nullopt;
  std::vector<std::uint32_t> v{p[0].residue(), p[1].residue(), p[2].residue()};
  return static_cast<std::uint32_t>(by_code_[code(normalized(v, p_))]);
}

std::optional<std::uint32_t> FiniteGeometry::index_of(const HPoint3& p) const {
  if (dim_ != 3 || !(p.field() == field())) return std::nullopt;
  std::vector<std::uint32_t> v{p[0].residue(), p[1].residue(), p[2].residue(), p[3].residue()};
  return static_cast<std::uint32_t>(by_code_[code(normalized(v, p_))]);
}

// ---- table harmonic fourth -------------------------------------------------

std::optional<TableFourth> table_harmonic_fourth(const FiniteGeometry& g, std::uint32_t a, std::uint32_t c,
                                                 std::uint32_t b, std::uint32_t p1, std::uint32_t p2) {
  int l = line_of(g, a, b);
  if (l < 0 || g.on(p1, l)) return std::nullopt;
  int ap1 = line_of(g, a, p1);
  if (ap1 < 0 || p2 == a || p2 == p1 || !g.on(p2, ap1)) return std::nullopt;
  int p3 = point_of(g, line_of(g, c, p1), line_of(g, b, p2));
  int p4 = point_of(g, line_of(g, a, p3), line_of(g, b, p1));
  int d = point_of(g, line_of(g, p2, p4), l);
  if (p3 < 0 || p4 < 0 || d < 0) return std::nullopt;
  return TableFourth{d, {p1, p2, p3, p4}};
}

std::optional<TableFourth> table_harmonic_fourth(const FiniteGeometry& g, std::uint32_t a, std::uint32_t c,
                                                 std::uint32_t b) {
  int l = line_of(g, a, b);
  if (l < 0) return std::nullopt;
  for (auto p1 : points_off_line(g, l)) {
    int ap1 = g.join(a, p1);
    if (ap1 < 0) continue;
    for (auto p2 : g.line(ap1)) {
      if (p2 == a || p2 == p1) continue;
      if (auto h = table_harmonic_fourth(g, a, c, b, p1, p2)) return h;
    }
  }
  return std::nullopt;
}

// ---- axioms ----------------------------------------------------------------

CheckResult check_axiom(const FiniteGeometry& g, int axiom, Exec exec) {
  switch (axiom) {
    case 1:
      return axiom1(g, exec);
    case 2:
      return axiom2(g, exec);
    case 3:
      return axiom3(g);
    case 4:
      return axiom4(g);
    case 5:
      return axiom5(g, exec);
  }
  fail(ErrorCode::ConfigInvalid, "axioms are numbered 1 to 5");
}

std::vector<CheckResult> check_axioms(const FiniteGeometry& g, Exec exec) {
  std::vector<CheckResult> out;
  for (int k = 1; k <= 5; ++k) out.push_back(check_axiom(g, k, exec));
  return out;
}

// ---- configuration theorems ------------------------------------------------

CheckResult pappus_exhaustive(const FiniteGeometry& g, Exec exec, const Budget& budget) {
  require_plane(g, "pappus_exhaustive");
  if (g.p() > budget.pappus_p) fail(ErrorCode::BudgetExceeded, "pappus_exhaustive over " + g.name());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t l = 0; l < g.line_count(); ++l)
    for (std::uint32_t m = l + 1; m < g.line_count(); ++m) pairs.emplace_back(l, m);

  auto r = result("pappus", 0);
  std::vector<std::uint64_t> counts(pairs.size(), 0);
  std::vector<std::vector<std::int64_t>> bad(pairs.size());
  auto at = first_failure(pairs.size(), exec, [&](std::size_t i) {
    auto [l, m] = pairs[i];
    int o = g.meet(l, m);
    if (o < 0) {
      bad[i] = {l, m};
      return false;
    }
    std::vector<std::uint32_t> as, bs;
    for (auto x : g.line(m))
      if (x != static_cast<std::uint32_t>(o)) as.push_back(x);
    for (auto x : g.line(l))
      if (x != static_cast<std::uint32_t>(o)) bs.push_back(x);
    std::array<std::int64_t, 3> a{}, b{};
    auto triples = [](const std::vector<std::uint32_t>& xs, auto&& fn) {
      for (auto x : xs)
        for (auto y : xs)
          for (auto z : xs)
            if (x != y && y != z && x != z && !fn(std::array<std::int64_t, 3>{x, y, z})) return false;
      return true;
    };
    return triples(as, [&](const std::array<std::int64_t, 3>& ta) {
      a = ta;
      return triples(bs, [&](const std::array<std::int64_t, 3>& tb) {
        b = tb;
        ++counts[i];
        auto pp = [&](int j, int k) {
          return point_of(g, line_of(g, a[j], b[k]), line_of(g, a[k], b[j]));
        };
        std::array<int, 3> q{pp(1, 2), pp(0, 2), pp(0, 1)};
        bool ok = q[0] >= 0 && q[1] >= 0 && q[2] >= 0;
        if (ok && q[0] != q[1] && q[1] != q[2] && q[0] != q[2]) ok = g.on(q[2], g.join(q[0], q[1]));
        if (!ok) bad[i] = {l, m, a[0], a[1], a[2], b[0], b[1], b[2], q[0], q[1], q[2]};
        return ok;
      });
    });
  });
  r.instances = sum_upto(counts, at);
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = bad[at];
    r.detail = "Pappus points not collinear";
  }
  return r;
}

CheckResult equipal_exhaustive(const FiniteGeometry& g, Exec exec, const Budget& budget) {
  if (g.dimension() != 3) fail(ErrorCode::DimensionMismatch, "equipal_exhaustive needs a space");
  if (g.p() > budget.equipal_p) fail(ErrorCode::BudgetExceeded, "equipal_exhaustive over " + g.name());
  auto nbr = neighbours(g);
  const std::size_t nl = g.line_count();
  auto r = result("equipal", 0);
  std::vector<std::uint64_t> counts(nl, 0);
  std::vector<std::vector<std::int64_t>> bad(nl);
  auto at = first_failure(nl, exec, [&](std::size_t a) {
    for (std::uint32_t b = a + 1; b < nl; ++b) {
      if (g.lines_meet(a, b)) continue;
      for (std::uint32_t c = b + 1; c < nl; ++c) {
        if (g.lines_meet(a, c) || g.lines_meet(b, c)) continue;
        ++counts[a];
        auto w = equipal_closure(g, nbr, a, b, c);
        if (!w.empty()) {
          bad[a] = std::move(w);
          return false;
        }
      }
    }
    return true;
  });
  r.instances = sum_upto(counts, at);
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = bad[at];
    r.detail = "transversal closure depends on the chosen rules";
  }
  return r;
}

CheckResult equipal_instance(const FiniteGeometry& g, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  if (g.dimension() != 3) fail(ErrorCode::DimensionMismatch, "equipal_instance needs a space");
  if (g.lines_meet(a, b) || g.lines_meet(a, c) || g.lines_meet(b, c))
    fail(ErrorCode::CoplanarGenerators, "lines must be pairwise skew");
  auto r = result("equipal-instance", 1);
  r.witness = equipal_closure(g, neighbours(g), a, b, c);
  if (!r.witness.empty()) {
    r.status = Status::fail;
    r.detail = "transversal closure depends on the chosen rules";
  }
  return r;
}

CheckResult harmonic_independence_exhaustive(const FiniteGeometry& g, Exec exec) {
  const std::size_t nl = g.line_count();
  auto r = result("harmonic-independence", 0);
  std::vector<std::uint64_t> counts(nl, 0);
  std::vector<std::vector<std::int64_t>> bad(nl);
  auto at = first_failure(nl, exec, [&](std::size_t l) {
    auto off = points_off_line(g, l);
    for (auto a : g.line(l))
      for (auto c : g.line(l))
        for (auto b : g.line(l)) {
          if (a == c || c == b || a == b) continue;
          auto ref = table_harmonic_fourth(g, a, c, b);
          if (!ref) {
            bad[l] = {a, c, b};
            return false;
          }
          for (auto p1 : off)
            for (auto p2 : g.line(g.join(a, p1))) {
              if (p2 == a || p2 == p1) continue;
              ++counts[l];
              auto h = table_harmonic_fourth(g, a, c, b, p1, p2);
              if (!h || h->d != ref->d) {
                bad[l] = {a, c, b, p1, p2, h ? h->d : -1, ref->d};
                return false;
              }
            }
        }
    return true;
  });
  r.instances = sum_upto(counts, at);
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = bad[at];
    r.detail = "harmonic fourth depends on the auxiliaries";
  }
  return r;
}

CheckResult klein_exhaustive(const FiniteGeometry& g, Exec exec) {
  require_plane(g, "klein_exhaustive");
  require_odd_characteristic(g.field());
  const std::size_t np = g.point_count();
  auto r = result("klein-triangle", 0);
  std::vector<std::uint64_t> counts(np, 0);
  std::vector<std::vector<std::int64_t>> bad(np);
  auto at = first_failure(np, exec, [&](std::size_t ai) {
    for (std::size_t bi = ai + 1; bi < np; ++bi)
      for (std::size_t ci = bi + 1; ci < np; ++ci) {
        if (g.on(ci, g.join(ai, bi))) continue;
        ++counts[ai];
        auto a = g.point2(ai), b = g.point2(bi), c = g.point2(ci);
        auto k = klein_triangle(a, harmonia::join(b, c), b, harmonia::join(a, c), c, harmonia::join(a, b));
        bool ok = k[1].then(k[2]) == k[3] && k[2].then(k[3]) == k[1] && k[1].then(k[3]) == k[2];
        for (int i = 1; i < 4; ++i) ok = ok && k[i].then(k[i]).is_identity();
        std::int64_t xi = -1;
        for (std::size_t x = 0; ok && x < np; ++x) {
          if (g.on(x, g.join(ai, bi)) || g.on(x, g.join(bi, ci)) || g.on(x, g.join(ai, ci))) continue;
          auto p = g.point2(x);
          std::array<HPoint2, 4> o{p, apply(k[1], p), apply(k[2], p), apply(k[3], p)};
          std::array<HPoint2, 3> diag{harmonia::meet(harmonia::join(o[0], o[1]), harmonia::join(o[2], o[3])),
                                      harmonia::meet(harmonia::join(o[0], o[2]), harmonia::join(o[1], o[3])),
                                      harmonia::meet(harmonia::join(o[0], o[3]), harmonia::join(o[1], o[2]))};
          for (const auto& v : {a, b, c})
            ok = ok && std::any_of(diag.begin(), diag.end(), [&](const HPoint2& d) { return d == v; });
          if (!ok) xi = static_cast<std::int64_t>(x);
        }
        if (!ok) {
          bad[ai] = {static_cast<std::int64_t>(ai), static_cast<std::int64_t>(bi), static_cast<std::int64_t>(ci), xi};
          return false;
        }
      }
    return true;
  });
  r.instances = sum_upto(counts, at);
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = bad[at];
    r.detail = "reflections of the triangle are not a Klein four-group";
  }
  return r;
}

CheckResult duality_exhaustive(const FiniteGeometry& g, Exec exec) {
  require_plane(g, "duality_exhaustive");
  require_odd_characteristic(g.field());
  const std::size_t np = g.point_count();
  auto r = result("tangent-duality", 0);
  std::vector<std::uint64_t> counts(np, 0);
  std::vector<std::vector<std::int64_t>> bad(np);
  auto at = first_failure(np, exec, [&](std::size_t ai) {
    for (std::size_t ci = 0; ci < np; ++ci) {
      if (ci == ai) continue;
      for (std::size_t bi = 0; bi < np; ++bi) {
        if (g.on(bi, g.join(ai, ci))) continue;
        for (std::size_t di = 0; di < np; ++di) {
          if (g.on(di, g.join(ai, ci)) || g.on(di, g.join(ci, bi)) || g.on(di, g.join(ai, bi))) continue;
          HarmonicCurve curve(Quadrangle(g.point2(ai), g.point2(ci), g.point2(bi), g.point2(di)));
          const auto& q = curve.q();
          const auto& qp = curve.pole_q();
          auto rho_q = harmonic_reflection(qp, q);
          for (auto xi : g.line(g.join(ai, bi))) {
            if (xi == ai || xi == bi) continue;
            ++counts[ai];
            auto x = g.point2(xi);
            auto y = harmonic_fourth(curve.generator().a(), x, curve.generator().b());
            auto rho_x = harmonic_reflection(x, harmonia::join(y, qp));
            auto rho_y = harmonic_reflection(y, harmonia::join(x, qp));
            auto z = curve.hc_point(x);
            auto zl = apply(rho_x, curve.tangents()[1]);
            bool ok = rho_x == rho_q.then(rho_y) && z == apply(rho_x, curve.generator().c()) && incident(z, zl) &&
                      zl == curve.tangent_at(z);
            if (!ok) {
              bad[ai] = {static_cast<std::int64_t>(ai), static_cast<std::int64_t>(ci), static_cast<std::int64_t>(bi),
                         static_cast<std::int64_t>(di), xi};
              return false;
            }
          }
        }
      }
    }
    return true;
  });
  r.instances = sum_upto(counts, at);
  if (at != kNoFailure) {
    r.status = Status::fail;
    r.witness = bad[at];
    r.detail = "point and tangent are not paired through the Klein triangle";
  }
  return r;
}

// ---- characteristic --------------------------------------------------------

ProbeResult characteristic_probe(Field f, std::size_t budget) {
  require_odd_characteristic(f);
  auto p0 = HPoint2::from_ints({0, 0, 1}, f);
  auto inf = HPoint2::from_ints({1, 0, 0}, f);
  auto prev = p0, cur = HPoint2::from_ints({1, 0, 1}, f);
  for (std::size_t steps = 1; steps < budget;) {
    auto next = harmonic_fourth(cur, prev, inf);
    ++steps;
    if (next == p0) return {static_cast<std::uint32_t>(steps), steps};
    prev = cur;
    cur = next;
  }
  return {0, budget};
}

ProbeResult characteristic_probe(const FiniteGeometry& g, std::size_t budget) {
  std::uint32_t p0, p1, inf;
  if (g.dimension() == 2) {
    p0 = *g.index_of(HPoint2::from_ints({0, 0, 1}, g.field()));
    p1 = *g.index_of(HPoint2::from_ints({1, 0, 1}, g.field()));
    inf = *g.index_of(HPoint2::from_ints({1, 0, 0}, g.field()));
  } else {
    p0 = *g.index_of(HPoint3::from_ints({0, 0, 0, 1}, g.field()));
    p1 = *g.index_of(HPoint3::from_ints({1, 0, 0, 1}, g.field()));
    inf = *g.index_of(HPoint3::from_ints({1, 0, 0, 0}, g.field()));
  }
  std::uint32_t prev = p0, cur = p1;
  for (std::size_t steps = 1; steps < budget;) {
    auto next = table_harmonic_fourth(g, cur, prev, inf);
    if (!next) return {0, steps};
    ++steps;
    if (static_cast<std::uint32_t>(next->d) == p0) return {static_cast<std::uint32_t>(steps), steps};
    prev = cur;
    cur = static_cast<std::uint32_t>(next->d);
  }
  return {0, budget};
}

}  // namespace harmonia
