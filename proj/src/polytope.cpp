#include "sublinear/polytope.hpp"

#include "sublinear/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sublinear {

template <Scalar T>
PointSet<T>::PointSet(std::vector<Point<T>> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidInput("point set must be nonempty");
  const std::size_t d = points_.front().size();
  if (d == 0) throw InvalidInput("point set dimension must be positive");
  for (const auto& p : points_)
    if (p.size() != d) throw DimensionMismatch("point set mixes dimensions");
}

namespace {

template <Scalar T>
T dot(const std::vector<T>& a, const Point<T>& b) {
  T s(0);
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  return s;
}

template <Scalar T>
bool pivot_positive(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return x > 0;
  } else {
    return x > 1e-9;
  }
}

/// Ratio-test comparison: float ties within 1e-12 (relative) go to Bland's
/// index rule, which exact ties already do.
template <Scalar T>
int compare_ratio(const T& a, const T& b) {
  if constexpr (std::same_as<T, double>) {
    if (std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b))) return 0;
  }
  return a < b ? -1 : (a == b ? 0 : 1);
}

template <Scalar T>
void flush_small(T& x) {
  if constexpr (std::same_as<T, double>) {
    if (std::abs(x) < 1e-14) x = 0.0;
  }
}

template <Scalar T>
struct PhaseOneResult {
  bool feasible = false;
  std::vector<T> lambda;  // per chosen column, at the phase-one optimum
  std::vector<T> farkas;  // per row of the original system, when infeasible
  bool stalled = false;   // float run stopped making progress
};

/// Phase one of the primal simplex on
///   A lambda = b, lambda >= 0,   A = [v_i ; 1], b = [z ; 1],
/// minimizing the sum of one artificial variable per row. Bland's rule for
/// both entering and leaving choices, so exact runs always terminate.
///
/// At an optimum with positive value the simplex multipliers u solve the
/// Farkas alternative: u.A_i <= 0 for every column and u.b > 0.
template <Scalar T>
PhaseOneResult<T> phase_one(const Point<T>& z, const std::vector<const Point<T>*>& cols) {
  const std::size_t d = z.size();
  const std::size_t m = d + 1;
  const std::size_t k = cols.size();
  const std::size_t width = k + m;

  std::vector<T> tab(m * width, T(0));
  std::vector<T> rhs(m);
  std::vector<int> sign(m, 1);
  auto at = [&](std::size_t r, std::size_t c) -> T& { return tab[r * width + c]; };

  for (std::size_t r = 0; r < m; ++r) {
    const T b = r < d ? z[r] : T(1);
    sign[r] = b < 0 ? -1 : 1;
    rhs[r] = sign[r] < 0 ? T(-b) : b;
    for (std::size_t j = 0; j < k; ++j) {
      const T a = r < d ? (*cols[j])[r] : T(1);
      at(r, j) = sign[r] < 0 ? T(-a) : a;
    }
    at(r, k + r) = T(1);
  }

  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), k);

  // Reduced costs: c_j - sum_r c_B(r) tab(r, j), with c = 0 on lambda and 1
  // on artificials.
  std::vector<T> reduced(width, T(0));
  for (std::size_t j = 0; j < k; ++j) {
    T s(0);
    for (std::size_t r = 0; r < m; ++r) s += at(r, j);
    reduced[j] = -s;
  }

  // Float runs can cycle through noise-level objective changes; report a
  // stall after this many pivots without a 1e-12 improvement.
  const std::size_t stall_limit = 50 * m + 100;
  T best_objective(0);
  for (std::size_t r = 0; r < m; ++r) best_objective += rhs[r];
  std::size_t last_improvement = 0;

  const std::size_t max_pivots = 100000;
  for (std::size_t iter = 0;; ++iter) {
    if (iter > max_pivots) throw Error("feasibility solver exceeded its pivot budget");
    if constexpr (std::same_as<T, double>) {
      T objective(0);
      for (std::size_t r = 0; r < m; ++r)
        if (basis[r] >= k) objective += rhs[r];
      if (objective < best_objective - 1e-12) {
        best_objective = objective;
        last_improvement = iter;
      } else if (iter - last_improvement > stall_limit) {
        PhaseOneResult<T> out;
        out.stalled = true;
        return out;
      }
    }
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j)
      if (ScalarTraits<T>::negative(reduced[j])) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = m;
    T best_ratio{};
    for (std::size_t r = 0; r < m; ++r) {
      if (!pivot_positive(at(r, enter))) continue;
      T ratio_r = rhs[r] / at(r, enter);
      const int cmp = leave == m ? -1 : compare_ratio(ratio_r, best_ratio);
      if (cmp < 0 || (cmp == 0 && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = std::move(ratio_r);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry in exact arithmetic. Float noise can hide it; stop then.
    if (leave == m) break;

    const T piv = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c)
      if (at(leave, c) != 0) at(leave, c) /= piv;
    rhs[leave] /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave) continue;
      const T factor = at(r, enter);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < width; ++c) {
        if (at(leave, c) == 0) continue;
        at(r, c) -= factor * at(leave, c);
        flush_small(at(r, c));
      }
      rhs[r] -= factor * rhs[leave];
      flush_small(rhs[r]);
    }
    const T rfactor = reduced[enter];
    for (std::size_t c = 0; c < width; ++c) {
      if (at(leave, c) == 0) continue;
      reduced[c] -= rfactor * at(leave, c);
      flush_small(reduced[c]);
    }
    basis[leave] = enter;
  }

  T residual(0);
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] >= k) residual += rhs[r];

  PhaseOneResult<T> out;
  if constexpr (std::same_as<T, Rational>) {
    out.feasible = residual == 0;
  } else {
    out.feasible = residual <= ScalarTraits<double>::tolerance;
  }
  out.lambda.assign(k, T(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < k) out.lambda[basis[r]] = rhs[r];
  if (!out.feasible) {
    out.farkas.resize(m);
    for (std::size_t r = 0; r < m; ++r) {
      T u = T(1) - reduced[k + r];
      out.farkas[r] = sign[r] < 0 ? T(-u) : u;
    }
  }
  return out;
}

/// Float phase one redone in exact arithmetic on the same (exactly
/// representable) inputs. Feasibility keeps the float tolerance.
PhaseOneResult<double> exact_phase_one(const Point<double>& z, const std::vector<const Point<double>*>& cols) {
  Point<Rational> zq(z.begin(), z.end());
  std::vector<Point<Rational>> store;
  store.reserve(cols.size());
  for (const auto* c : cols) store.emplace_back(c->begin(), c->end());
  std::vector<const Point<Rational>*> colsq;
  for (const auto& c : store) colsq.push_back(&c);

  PhaseOneResult<Rational> exact = phase_one(zq, colsq);
  PhaseOneResult<double> out;
  for (const auto& l : exact.lambda) out.lambda.push_back(l.convert_to<double>());
  if (exact.feasible) {
    out.feasible = true;
    return out;
  }
  // Phase-one optimum u.b; within tolerance the point counts as a member.
  Rational residual = exact.farkas.back();
  for (std::size_t r = 0; r < zq.size(); ++r) residual += exact.farkas[r] * zq[r];
  if (residual.convert_to<double>() <= ScalarTraits<double>::tolerance) {
    out.feasible = true;
    return out;
  }
  for (const auto& u : exact.farkas) out.farkas.push_back(u.convert_to<double>());
  return out;
}

/// Membership against an arbitrary column pool by delayed column generation:
/// solve on a restricted pool, and on infeasibility price every column of the
/// full pool against the Farkas multipliers. A certificate that no column
/// violates is a certificate for the full pool.
template <Scalar T>
Membership<T> solve_membership(const Point<T>& z, const std::vector<const Point<T>*>& pool) {
  const std::size_t n = pool.size();
  const std::size_t m = z.size() + 1;
  std::vector<std::size_t> active;
  std::vector<char> in_active(n, 0);

  for (;;) {
    std::vector<const Point<T>*> cols;
    cols.reserve(active.size());
    for (std::size_t i : active) cols.push_back(pool[i]);
    PhaseOneResult<T> res = phase_one(z, cols);
    if constexpr (std::same_as<T, double>) {
      if (res.stalled) res = exact_phase_one(z, cols);
    }

    Membership<T> out;
    if (res.feasible) {
      out.member = true;
      out.combination.assign(n, T(0));
      for (std::size_t j = 0; j < active.size(); ++j) out.combination[active[j]] = res.lambda[j];
      return out;
    }

    std::vector<T> y(res.farkas.begin(), res.farkas.end() - 1);
    const T& t = res.farkas.back();

    std::vector<std::pair<T, std::size_t>> violated;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_active[i]) continue;
      T score = dot(y, *pool[i]) + t;
      if (ScalarTraits<T>::positive(score)) violated.emplace_back(std::move(score), i);
    }
    if (violated.empty()) {
      T scale(0);
      for (const auto& c : y) scale = std::max(scale, c < 0 ? T(-c) : c);
      if (scale == 0) throw Error("degenerate separating direction");
      for (auto& c : y) c /= scale;
      T bound = dot(y, *pool.front());
      for (std::size_t i = 1; i < n; ++i) bound = std::max(bound, dot(y, *pool[i]));
      out.value_at_point = dot(y, z);
      out.bound = std::move(bound);
      out.separator = std::move(y);
      return out;
    }
    std::sort(violated.begin(), violated.end(), [](const auto& a, const auto& b) {
      return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    const std::size_t take = std::min(violated.size(), m);
    for (std::size_t j = 0; j < take; ++j) {
      active.push_back(violated[j].second);
      in_active[violated[j].second] = 1;
    }
  }
}

template <Scalar T>
std::vector<const Point<T>*> pointers(const PointSet<T>& v) {
  std::vector<const Point<T>*> out;
  out.reserve(v.size());
  for (const auto& p : v.points()) out.push_back(&p);
  return out;
}

template <Scalar T>
bool contains_literal(const std::vector<Point<T>>& sorted, const Point<T>& p) {
  if constexpr (std::same_as<T, Rational>) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
  } else {
    // Near-equal points need not be adjacent in lexicographic order; scan the
    // window of matching leading coordinates.
    const double lo = p.front() - ScalarTraits<double>::dedupe_tolerance;
    const double hi = p.front() + ScalarTraits<double>::dedupe_tolerance;
    auto it = std::lower_bound(sorted.begin(), sorted.end(), lo,
                               [](const Point<T>& q, double v) { return q.front() < v; });
    for (; it != sorted.end() && it->front() <= hi; ++it)
      if (same_point(*it, p)) return true;
    return false;
  }
}

/// First point of `from` outside conv(`into`), with its certificate.
template <Scalar T>
std::optional<Membership<T>> first_outside(const PointSet<T>& from, const PointSet<T>& into) {
  const auto pool = pointers(into);
  for (const auto& p : from.points()) {
    if (contains_literal(into.points(), p)) continue;
    Membership<T> res = solve_membership(p, pool);
    if (!res.member) return res;
  }
  return std::nullopt;
}

}  // namespace

template <Scalar T>
Membership<T> membership(const Point<T>& z, const PointSet<T>& v) {
  if (z.size() != v.dimension())
    throw DimensionMismatch("query point has dimension " + std::to_string(z.size()) + ", point set has " +
                            std::to_string(v.dimension()));
  return solve_membership(z, pointers(v));
}

template <Scalar T>
bool is_member(const Point<T>& z, const PointSet<T>& v) {
  return membership(z, v).member;
}

template <Scalar T>
PointSet<T> unique_points(const PointSet<T>& v) {
  std::vector<Point<T>> pts = v.points();
  std::sort(pts.begin(), pts.end());
  auto last = std::unique(pts.begin(), pts.end(), [](const Point<T>& a, const Point<T>& b) { return same_point(a, b); });
  pts.erase(last, pts.end());
  return PointSet<T>(std::move(pts));
}

template <Scalar T>
PointSet<T> vertices(const PointSet<T>& v) {
  PointSet<T> u = unique_points(v);
  const std::size_t n = u.size();
  std::vector<char> alive(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<const Point<T>*> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && alive[j]) others.push_back(&u[j]);
    if (others.empty()) continue;
    // Dropping a non-extreme point leaves the hull unchanged, so later
    // checks may run against the reduced pool.
    if (solve_membership(u[i], others).member) alive[i] = 0;
  }
  std::vector<Point<T>> kept;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) kept.push_back(u[i]);
  return PointSet<T>(std::move(kept));
}

template <Scalar T>
T support_value(const PointSet<T>& v, const std::vector<T>& direction) {
  if (direction.size() != v.dimension()) throw DimensionMismatch("direction dimension differs from point set");
  T best = dot(direction, v[0]);
  for (std::size_t i = 1; i < v.size(); ++i) best = std::max(best, dot(direction, v[i]));
  return best;
}

template <Scalar T>
HullComparison<T> compare_hulls(const PointSet<T>& a, const PointSet<T>& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("hull comparison across dimensions");
  const PointSet<T> ua = unique_points(a);
  const PointSet<T> ub = unique_points(b);

  HullComparison<T> out;
  auto finish = [&](Membership<T> res) {
    out.equal = false;
    out.value_a = support_value(ua, *res.separator);
    out.value_b = support_value(ub, *res.separator);
    out.witness = std::move(res.separator);
  };
  if (auto res = first_outside(ua, ub)) {
    finish(std::move(*res));
    return out;
  }
  if (auto res = first_outside(ub, ua)) {
    finish(std::move(*res));
    return out;
  }
  return out;
}

template <Scalar T>
bool hulls_equal(const PointSet<T>& a, const PointSet<T>& b) {
  return compare_hulls(a, b).equal;
}

#define SUBLINEAR_INSTANTIATE(T)                                                      \
  template class PointSet<T>;                                                         \
  template Membership<T> membership<T>(const Point<T>&, const PointSet<T>&);          \
  template bool is_member<T>(const Point<T>&, const PointSet<T>&);                    \
  template PointSet<T> unique_points<T>(const PointSet<T>&);                          \
  template PointSet<T> vertices<T>(const PointSet<T>&);                               \
  template T support_value<T>(const PointSet<T>&, const std::vector<T>&);             \
  template HullComparison<T> compare_hulls<T>(const PointSet<T>&, const PointSet<T>&); \
  template bool hulls_equal<T>(const PointSet<T>&, const PointSet<T>&);

SUBLINEAR_INSTANTIATE(Rational)
SUBLINEAR_INSTANTIATE(double)

#undef SUBLINEAR_INSTANTIATE

}  // namespace sublinear
