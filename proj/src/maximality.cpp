#include "sublinear/maximality.hpp"

#include "sublinear/errors.hpp"
#include "sublinear/polytope.hpp"
#include "sublinear/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sublinear {

template <Scalar T>
MaximalityCertificate<T> is_maximal(const Distribution<T>& d) {
  MaximalityCertificate<T> cert;
  const PointSet<T> verts = vertices(PointSet<T>::from_credal(d.credal()));
  for (const auto& v : verts.points()) {
    ProbabilityMeasure<T> m = ProbabilityMeasure<T>::unvalidated(d.grid(), v);
    if (auto idx = m.dirac_index()) {
      cert.gamma_indices.push_back(*idx);
      continue;
    }
    cert.maximal = false;
    cert.gamma_indices.clear();
    cert.violator = std::move(m);
    return cert;
  }
  std::sort(cert.gamma_indices.begin(), cert.gamma_indices.end());
  for (std::size_t i : cert.gamma_indices) cert.gamma.push_back(d.grid()[i]);
  cert.maximal = true;
  return cert;
}

template <Scalar T>
GMap<T>::GMap(T epsilon) : epsilon_(std::move(epsilon)) {
  if (epsilon_ < 0 || !(epsilon_ < 1)) throw InvalidInput("G-map epsilon must lie in [0, 1)");
}

template <Scalar T>
T g_iterate(const T& a, const GMap<T>& g, std::uint64_t n) {
  if (n == 0) throw InvalidInput("g_iterate needs n >= 1");
  return positive_part(a) - power(g.epsilon(), n) * negative_part(a);
}

std::uint64_t limit_iterations(double epsilon, double bound, double tolerance) {
  if (epsilon <= 0.0) return 1;
  if (epsilon >= 1.0) throw InvalidInput("limit step needs epsilon < 1");
  const double n = std::ceil(std::log(tolerance / std::max(1.0, bound)) / std::log(epsilon));
  return n < 1.0 ? 1 : static_cast<std::uint64_t>(n);
}

namespace {

template <Scalar T>
bool agree(const T& a, const T& b, double tolerance) {
  if constexpr (std::same_as<T, Rational>) {
    (void)tolerance;
    return a == b;
  } else {
    return std::abs(a - b) <= tolerance;
  }
}

template <Scalar T>
bool at_most(const T& a, const T& b, double tolerance) {
  if constexpr (std::same_as<T, Rational>) {
    (void)tolerance;
    return a <= b;
  } else {
    return a <= b + tolerance;
  }
}

template <Scalar T>
std::string show(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return format_rational(x);
  } else {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
  }
}

template <Scalar T>
std::vector<ValueTable<T>> psi_family(const FiniteSupport<T>& grid, std::size_t count, std::uint64_t seed) {
  std::vector<ValueTable<T>> out;
  out.push_back(ValueTable<T>::from_function(grid, [](const Point<T>& y) { return y[0]; }));
  out.push_back(ValueTable<T>::from_function(grid, [](const Point<T>& y) { return y[0] < 0 ? T(-y[0]) : y[0]; }));
  out.push_back(ValueTable<T>::from_function(grid, [](const Point<T>& y) { return positive_part(y[0]); }));
  out.push_back(ValueTable<T>::from_function(grid, [](const Point<T>& y) { return negative_part(y[0]); }));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const std::size_t idx[] = {j};
    out.push_back(ValueTable<T>::indicator(grid, idx) + ratio<T>(-1, 2));
  }
  if (out.size() > count) out.erase(out.begin() + static_cast<std::ptrdiff_t>(count), out.end());
  Xorshift64Star rng(seed);
  while (out.size() < count) {
    std::vector<T> v;
    for (std::size_t j = 0; j < grid.size(); ++j) v.push_back(sample_uniform<T>(rng, -1, 1));
    out.emplace_back(grid, std::move(v));
  }
  return out;
}

}  // namespace

template <Scalar T>
Lemma2Report<T> verify_lemma2(const Distribution<T>& dx, const Distribution<T>& dy, std::size_t psi_samples,
                              std::uint64_t n_max, std::uint64_t seed, double tolerance) {
  if (!has_distributional_uncertainty(dx))
    throw HypothesisViolated("X must have distributional uncertainty");
  const HullComparison<T> orders = compare_orders(dx, dy);
  if (!orders.equal)
    throw HypothesisViolated("X and Y are not mutually independent: the two Peng products differ (" +
                             show(orders.value_a) + " vs " + show(orders.value_b) + " on the witness)");

  const UncertaintyWitness<T> witness = uncertainty_witness(dx);
  const GMap<T> g(witness.epsilon);
  Lemma2Report<T> report;
  report.epsilon = witness.epsilon;
  report.witness_index = witness.index;

  const auto& gx = dx.grid();
  const auto& gy = dy.grid();
  const auto psis = psi_family(gy, psi_samples, seed);
  auto value = [&](const ValueTable<T>& t) { return sublinear_eval(dy, t); };

  for (std::size_t s = 0; s < psis.size(); ++s) {
    const ValueTable<T>& psi = psis[s];
    auto check = [&](bool ok, const char* identity, const std::string& detail) {
      ++report.checks;
      if (!ok) report.failures.push_back({s, identity, detail});
    };
    const T e_psi = value(psi);

    std::vector<T> prod;
    prod.reserve(gx.size() * gy.size());
    for (std::size_t i = 0; i < gx.size(); ++i)
      for (std::size_t j = 0; j < gy.size(); ++j) prod.push_back(witness.phi[i] * psi[j]);
    const ValueTable<T> joint_table(product_support(gx, gy), std::move(prod));

    const T g_e = g(e_psi);
    const T e_g_psi = value(psi.map([&g](const T& a) { return g(a); }));
    const T lhs1 = nested_expect(dx, dy, joint_table, ProductOrder::YFromX);
    const T lhs2 = nested_expect(dx, dy, joint_table, ProductOrder::XFromY);
    check(agree(lhs1, g_e, tolerance), "outer-x", show(lhs1) + " vs G(E[psi]) = " + show(g_e));
    check(agree(lhs2, e_g_psi, tolerance), "outer-y", show(lhs2) + " vs E[G(psi)] = " + show(e_g_psi));
    check(agree(e_g_psi, g_e, tolerance), "g-commutes", show(e_g_psi) + " vs " + show(g_e));

    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const T lhs = value(psi.map([&](const T& a) { return g_iterate(a, g, n); }));
      const T rhs = g_iterate(e_psi, g, n);
      check(agree(lhs, rhs, tolerance), "g-iterate", "n=" + std::to_string(n) + ": " + show(lhs) + " vs " + show(rhs));
    }

    // Limit step. The truncation error of both sides at depth n is bounded by
    // epsilon^n E[psi^-] and epsilon^n (E[psi])^-.
    const T e_pos = value(psi.map([](const T& a) { return positive_part(a); }));
    const T e_neg = value(psi.map([](const T& a) { return negative_part(a); }));
    const T bound = e_neg + negative_part(e_psi);
    const std::uint64_t n = limit_iterations(to_double(witness.epsilon), to_double(bound), tolerance);
    report.max_limit_iterations = std::max(report.max_limit_iterations, n);
    const T eps_n = power(witness.epsilon, n);
    const T lhs_n = value(psi.map([&](const T& a) { return g_iterate(a, g, n); }));
    const T diff_lhs = lhs_n - e_pos;
    check(agree(lhs_n, g_iterate(e_psi, g, n), tolerance), "g-iterate",
          "limit depth n=" + std::to_string(n) + ": " + show(lhs_n));
    check(at_most(T(diff_lhs < 0 ? T(-diff_lhs) : diff_lhs), T(eps_n * e_neg), tolerance), "limit-bound", "|E[G^n(psi)] - E[psi^+]| exceeds eps^n E[psi^-]");
    const double gap = std::abs(to_double(T(e_pos - positive_part(e_psi))));
    check(gap <= tolerance, "limit", "E[psi^+] = " + show(e_pos) + " vs (E[psi])^+ = " + show(positive_part(e_psi)));

    const ValueTable<T> centered = psi + T(-e_psi);
    const T collapse = value(centered.map([](const T& a) { return positive_part(a); }));
    check(agree(collapse, T(0), tolerance), "collapse", "E[(psi - E[psi])^+] = " + show(collapse));
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < gy.size(); ++j)
      if (ScalarTraits<T>::positive(T(psi[j] - e_psi))) above.push_back(j);
    const T cap = capacity(dy.credal(), above);
    check(agree(cap, T(0), tolerance), "capacity", "c({psi > E[psi]}) = " + show(cap));
  }
  report.samples = psis.size();
  return report;
}

#define SUBLINEAR_INSTANTIATE(T)                                                                      \
  template MaximalityCertificate<T> is_maximal<T>(const Distribution<T>&);                            \
  template class GMap<T>;                                                                             \
  template T g_iterate<T>(const T&, const GMap<T>&, std::uint64_t);                                   \
  template Lemma2Report<T> verify_lemma2<T>(const Distribution<T>&, const Distribution<T>&, std::size_t, \
                                            std::uint64_t, std::uint64_t, double);

SUBLINEAR_INSTANTIATE(Rational)
SUBLINEAR_INSTANTIATE(double)

#undef SUBLINEAR_INSTANTIATE

}  // namespace sublinear
