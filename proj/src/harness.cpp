#include "sublinear/harness.hpp"

#include "sublinear/errors.hpp"
#include "sublinear/json_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <numeric>

namespace sublinear {

namespace {

using Json = nlohmann::json;
namespace jio = sublinear::json;

constexpr std::int64_t kGridLow = -5;
constexpr std::int64_t kGridHigh = 5;
constexpr std::int64_t kMaxDenominator = 16;
constexpr std::size_t kMaxDraws = 10000;

std::size_t pick(Xorshift64Star& rng, std::pair<std::size_t, std::size_t> range) {
  return static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(range.first),
                                              static_cast<std::int64_t>(range.second)));
}

/// `n` distinct integers from [kGridLow, kGridHigh], ascending.
std::vector<std::int64_t> distinct_integers(Xorshift64Star& rng, std::size_t n) {
  std::vector<std::int64_t> pool(static_cast<std::size_t>(kGridHigh - kGridLow + 1));
  std::iota(pool.begin(), pool.end(), kGridLow);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  std::sort(pool.begin(), pool.end());
  return pool;
}

template <Scalar T>
FiniteSupport<T> integer_grid(const std::vector<std::int64_t>& xs) {
  std::vector<T> values;
  for (auto x : xs) values.push_back(T(x));
  return FiniteSupport<T>::line(values);
}

/// Weights c_i / q from q units dropped on `slots` (indices into the support).
template <Scalar T>
ProbabilityMeasure<T> random_fraction_measure(Xorshift64Star& rng, const FiniteSupport<T>& support,
                                              const std::vector<std::size_t>& slots) {
  const auto q = rng.between(1, kMaxDenominator);
  std::vector<std::int64_t> counts(support.size(), 0);
  for (std::int64_t u = 0; u < q; ++u) counts[slots[rng.below(slots.size())]] += 1;
  std::vector<T> w;
  for (auto c : counts) w.push_back(ratio<T>(c, q));
  return make_measure(support, std::move(w));
}

template <Scalar T>
Distribution<T> dirac_law(const FiniteSupport<T>& grid, Xorshift64Star& rng, std::size_t diracs) {
  std::vector<std::size_t> idx(grid.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < diracs; ++i) std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
  idx.resize(diracs);
  std::sort(idx.begin(), idx.end());
  std::vector<ProbabilityMeasure<T>> gens;
  for (auto i : idx) gens.push_back(dirac(grid, i));
  if (diracs >= 2 && rng.coin(1, 2)) gens.push_back(random_fraction_measure(rng, grid, idx));
  return Distribution<T>(CredalSet<T>(grid, std::move(gens)));
}

template <Scalar T>
std::string show(const T& x) {
  if constexpr (std::same_as<T, Rational>) {
    return format_rational(x);
  } else {
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return ec == std::errc() ? std::string(buf.data(), end) : std::string("?");
  }
}

template <Scalar T>
bool matches(const T& actual, const T& expected) {
  if constexpr (std::same_as<T, Rational>) {
    return actual == expected;
  } else {
    return std::abs(actual - expected) <= 1e-9;
  }
}

template <Scalar T>
void expect_value(ExampleReport& report, std::string name, const T& actual, const T& expected) {
  report.checks.push_back({std::move(name), show(expected), show(actual), matches(actual, expected)});
}

void expect_true(ExampleReport& report, std::string name, bool value) {
  report.checks.push_back({std::move(name), "true", value ? "true" : "false", value});
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Json pair_instance(const Distribution<Rational>& dx, const Distribution<Rational>& dy) {
  return Json{{"x", jio::to_json(dx)}, {"y", jio::to_json(dy)}};
}

Json range_json(std::pair<std::size_t, std::size_t> r) { return Json::array({r.first, r.second}); }

std::pair<std::size_t, std::size_t> range_from_json(const Json& j, const char* key) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    throw InvalidInput(std::string("'") + key + "' must be [min, max] with nonnegative integers");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (r > kMaxSelections) return r;
    r *= base;
  }
  return r;
}

}  // namespace

void TrialConfig::validate() const {
  auto [gmin, gmax] = grid_size_range;
  auto [kmin, kmax] = generator_count_range;
  if (gmin < 1 || gmin > gmax) throw InvalidInput("grid_size_range must satisfy 1 <= min <= max");
  if (gmax > kMaxOuterGrid)
    throw InvalidInput("grid_size_range max exceeds the product size guard (" + std::to_string(kMaxOuterGrid) + ")");
  if (gmax > static_cast<std::size_t>(kGridHigh - kGridLow + 1)) throw InvalidInput("grid_size_range max too large");
  if (kmin < 1 || kmin > kmax) throw InvalidInput("generator_count_range must satisfy 1 <= min <= max");
  if (checked_power(kmax, gmax) > kMaxSelections)
    throw InvalidInput("generator_count_range max ^ grid_size_range max exceeds the product size guard (" +
                       std::to_string(kMaxSelections) + ")");
  if (max_gamma < 1 || max_gamma > kMaxOuterGrid || checked_power(max_gamma, max_gamma) > kMaxSelections)
    throw InvalidInput("max_gamma outside the product size guard");
  if (!(tolerance > 0)) throw InvalidInput("tolerance must be positive");
}

Json to_json(const TrialConfig& c) {
  return Json{{"trials", c.trials},
              {"seed", c.seed},
              {"grid_size_range", range_json(c.grid_size_range)},
              {"generator_count_range", range_json(c.generator_count_range)},
              {"mode", std::string(to_string(c.mode))},
              {"tolerance", c.tolerance},
              {"forward_trials", c.forward_trials},
              {"max_gamma", c.max_gamma},
              {"weak_trials", c.weak_trials}};
}

TrialConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("config must be a JSON object");
  TrialConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "trials") c.trials = value.get<std::size_t>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "grid_size_range") c.grid_size_range = range_from_json(value, "grid_size_range");
      else if (key == "generator_count_range") c.generator_count_range = range_from_json(value, "generator_count_range");
      else if (key == "mode") c.mode = parse_mode(value.get<std::string>());
      else if (key == "tolerance") c.tolerance = value.get<double>();
      else if (key == "forward_trials") c.forward_trials = value.get<std::size_t>();
      else if (key == "max_gamma") c.max_gamma = value.get<std::size_t>();
      else if (key == "weak_trials") c.weak_trials = value.get<std::size_t>();
      else throw InvalidInput("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad config value: ") + e.what());
  }
  return c;
}

template <Scalar T>
Distribution<T> random_distribution(Xorshift64Star& rng, const TrialConfig& config, DrawStyle style) {
  const std::size_t n = pick(rng, config.grid_size_range);
  const std::size_t k = pick(rng, config.generator_count_range);
  FiniteSupport<T> grid = integer_grid<T>(distinct_integers(rng, n));
  if (style == DrawStyle::Maximal) return dirac_law(grid, rng, std::min(k, n));
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<ProbabilityMeasure<T>> gens;
  for (std::size_t g = 0; g < k; ++g) gens.push_back(random_fraction_measure(rng, grid, all));
  return Distribution<T>(CredalSet<T>(grid, std::move(gens)));
}

template <Scalar T>
Distribution<T> random_distribution(std::uint64_t seed, const TrialConfig& config, DrawStyle style) {
  config.validate();
  Xorshift64Star rng(seed);
  return random_distribution<T>(rng, config, style);
}

template <Scalar T>
Distribution<T> random_maximal_distribution(Xorshift64Star& rng, std::size_t max_gamma) {
  const auto g = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_gamma)));
  FiniteSupport<T> grid = integer_grid<T>(distinct_integers(rng, g));
  return dirac_law(grid, rng, g);
}

TrialRecord evaluate_pair(const Distribution<Rational>& dx, const Distribution<Rational>& dy) {
  TrialRecord r;
  r.instance = pair_instance(dx, dy);
  r.digest = fnv1a_hex(r.instance.dump());
  r.x_uncertain = has_distributional_uncertainty(dx);
  r.y_uncertain = has_distributional_uncertainty(dy);
  r.x_constant = is_constant(dx);
  r.y_constant = is_constant(dy);
  r.x_maximal = is_maximal(dx).maximal;
  r.y_maximal = is_maximal(dy).maximal;
  r.hypothesis = r.x_uncertain && !r.y_constant;

  JointDistribution<Rational> yx = peng_product(dx, dy, ProductOrder::YFromX);
  JointDistribution<Rational> xy = peng_product(dx, dy, ProductOrder::XFromY);
  HullComparison<Rational> cmp =
      compare_hulls(PointSet<Rational>::from_credal(yx.credal()), PointSet<Rational>::from_credal(xy.credal()));
  r.mutual = cmp.equal;

  if (r.mutual) {
    if (!(r.x_maximal && r.y_maximal)) {
      r.counterexample = true;
      r.reason = "products coincide but a marginal is not maximal";
    }
    return r;
  }

  ValueTable<Rational> w(yx.support(), *cmp.witness);
  const Rational a = sup_expect(yx.credal(), w);
  const Rational b = sup_expect(xy.credal(), w);
  const Rational na = nested_expect(dx, dy, w, ProductOrder::YFromX);
  const Rational nb = nested_expect(dx, dy, w, ProductOrder::XFromY);
  r.consistent = a != b && a == na && b == nb && a == cmp.value_a && b == cmp.value_b;
  r.witness = Json{{"table", jio::to_json(w)},
                   {"values", Json::array({jio::scalar_to_json(a), jio::scalar_to_json(b)})}};
  if (!r.consistent) {
    r.counterexample = true;
    r.reason = "separating table does not re-evaluate to two different values";
  } else if (r.x_maximal && r.y_maximal) {
    r.counterexample = true;
    r.reason = "maximal marginals but the products differ";
  }
  return r;
}

template <Scalar T>
MaximalPairReport check_maximal_pair(const Distribution<T>& dx, const Distribution<T>& dy) {
  MaximalPairReport r;
  JointDistribution<T> yx = peng_product(dx, dy, ProductOrder::YFromX);
  JointDistribution<T> xy = peng_product(dx, dy, ProductOrder::XFromY);
  r.hull_equal = hulls_equal(PointSet<T>::from_credal(yx.credal()), PointSet<T>::from_credal(xy.credal()));
  r.independent_y_from_x = is_independent(yx, ProductOrder::YFromX).independent &&
                           is_independent(xy, ProductOrder::YFromX).independent;
  r.independent_x_from_y = is_independent(yx, ProductOrder::XFromY).independent &&
                           is_independent(xy, ProductOrder::XFromY).independent;

  MaximalityCertificate<T> cx = is_maximal(dx);
  MaximalityCertificate<T> cy = is_maximal(dy);
  MaximalityCertificate<T> cj = is_maximal(Distribution<T>(yx.credal()));
  r.joint_maximal = cj.maximal;
  r.joint_gamma_size = cj.gamma.size();
  if (cx.maximal && cy.maximal && cj.maximal && cj.gamma.size() == cx.gamma.size() * cy.gamma.size()) {
    r.gamma_is_product = true;
    for (const auto& a : cx.gamma) {
      for (const auto& b : cy.gamma) {
        Point<T> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        bool found = std::any_of(cj.gamma.begin(), cj.gamma.end(), [&](const Point<T>& p) { return same_point(p, ab); });
        if (!found) r.gamma_is_product = false;
      }
    }
  }
  return r;
}

TrialReport verify_theorem(const TrialConfig& config) {
  config.validate();
  if (config.mode != Mode::Rational) throw InvalidInput("theorem verification requires rational mode");
  if (config.grid_size_range.second < 2 || config.generator_count_range.second < 2)
    throw InvalidInput("config cannot produce a law with distributional uncertainty");

  const auto start = std::chrono::steady_clock::now();
  TrialReport report;
  report.trials = config.trials;
  for (std::size_t t = 0; t < config.trials; ++t) {
    Xorshift64Star rng(derive_seed(config.seed, t));
    std::size_t discarded = 0;
    for (;;) {
      DrawStyle sx = rng.coin(1, 3) ? DrawStyle::Maximal : DrawStyle::General;
      DrawStyle sy = rng.coin(1, 3) ? DrawStyle::Maximal : DrawStyle::General;
      Distribution<Rational> dx = random_distribution<Rational>(rng, config, sx);
      Distribution<Rational> dy = random_distribution<Rational>(rng, config, sy);
      if (!has_distributional_uncertainty(dx) || is_constant(dy)) {
        if (++discarded >= kMaxDraws) throw InvalidInput("could not draw a non-trivial pair");
        continue;
      }
      TrialRecord rec = evaluate_pair(dx, dy);
      rec.index = t;
      rec.discarded = discarded;
      report.discarded += discarded;
      if (rec.mutual) ++report.mutual;
      if (!rec.x_maximal || !rec.y_maximal) ++report.non_maximal;
      if (rec.counterexample) ++report.counterexamples;
      report.records.push_back(std::move(rec));
      break;
    }
  }

  const std::uint64_t forward_seed = splitmix64(config.seed ^ 0x466F7277617264ULL);
  report.forward_trials = config.forward_trials;
  for (std::size_t f = 0; f < config.forward_trials; ++f) {
    Xorshift64Star rng(derive_seed(forward_seed, f));
    Distribution<Rational> dx = random_maximal_distribution<Rational>(rng, config.max_gamma);
    Distribution<Rational> dy = random_maximal_distribution<Rational>(rng, config.max_gamma);
    if (!check_maximal_pair(dx, dy).ok()) {
      ++report.forward_failures;
      report.forward_failure_instances.push_back(pair_instance(dx, dy));
    }
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

Json to_json(const TrialRecord& r) {
  Json out{{"index", r.index},
           {"digest", r.digest},
           {"flags",
            {{"x_uncertain", r.x_uncertain},
             {"y_uncertain", r.y_uncertain},
             {"x_constant", r.x_constant},
             {"y_constant", r.y_constant},
             {"x_maximal", r.x_maximal},
             {"y_maximal", r.y_maximal},
             {"hypothesis", r.hypothesis}}},
           {"mutual", r.mutual},
           {"consistent", r.consistent},
           {"counterexample", r.counterexample},
           {"discarded", r.discarded}};
  if (r.witness) out["witness"] = *r.witness;
  if (r.counterexample) {
    out["reason"] = r.reason;
    out["instance"] = r.instance;
  }
  return out;
}

Json to_json(const TrialReport& r, bool full) {
  Json records = Json::array();
  for (const auto& rec : r.records)
    if (full || rec.counterexample) records.push_back(to_json(rec));
  return Json{{"trials", r.trials},
              {"counterexamples", r.counterexamples},
              {"discarded", r.discarded},
              {"mutual", r.mutual},
              {"non_maximal", r.non_maximal},
              {"forward_trials", r.forward_trials},
              {"forward_failures", r.forward_failures},
              {"forward_failure_instances", r.forward_failure_instances},
              {"wall_seconds", r.wall_seconds},
              {"ok", r.ok()},
              {"records", records}};
}

bool ExampleReport::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ExampleCheck& c) { return c.ok; });
}

Json to_json(const ExampleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
  return Json{{"name", r.name}, {"mode", std::string(to_string(r.mode))}, {"checks", checks}, {"ok", r.ok()}};
}

template <Scalar T>
ExampleReport reproduce_example_xy2() {
  ExampleReport report{"x*y^2 asymmetry", mode_of<T>(), {}};
  FiniteSupport<T> grid = FiniteSupport<T>::line({T(-1), T(0), T(1)});
  CredalSet<T> credal(grid, {make_measure(grid, {ratio<T>(1, 4), ratio<T>(1, 2), ratio<T>(1, 4)}),
                             make_measure(grid, {ratio<T>(2, 5), ratio<T>(1, 5), ratio<T>(2, 5)})});
  Distribution<T> d(credal);
  auto x = ValueTable<T>::from_function(grid, [](const Point<T>& p) { return p[0]; });
  auto x2 = x * x;
  auto xplus = x.map([](const T& v) { return positive_part(v); });

  const T sigma_hi = sublinear_eval(d, x2);
  const T sigma_lo = -sublinear_eval(d, -x2);
  const T e_xplus = sublinear_eval(d, xplus);
  expect_value(report, "E[X]", sublinear_eval(d, x), T(0));
  expect_value(report, "E[-X]", sublinear_eval(d, -x), T(0));
  expect_value(report, "upper variance", sigma_hi, ratio<T>(4, 5));
  expect_value(report, "lower variance", sigma_lo, ratio<T>(1, 2));
  expect_value(report, "E[X+]", e_xplus, ratio<T>(2, 5));

  auto xy2 = product_table<T>(grid, grid, [](const Point<T>& a, const Point<T>& b) { return a[0] * b[0] * b[0]; });
  const T yx = nested_expect(d, d, xy2, ProductOrder::YFromX);
  const T xy = nested_expect(d, d, xy2, ProductOrder::XFromY);
  expect_value(report, "nested x*y^2, y-from-x", yx, ratio<T>(3, 25));
  expect_value(report, "nested x*y^2, x-from-y", xy, T(0));
  expect_value(report, "(upper - lower variance) * E[X+]", T((sigma_hi - sigma_lo) * e_xplus), yx);
  expect_true(report, "y-from-x value positive", yx > 0);

  JointDistribution<T> pyx = peng_product(d, d, ProductOrder::YFromX);
  JointDistribution<T> pxy = peng_product(d, d, ProductOrder::XFromY);
  expect_value(report, "materialized x*y^2, y-from-x", sup_expect(pyx.credal(), xy2), ratio<T>(3, 25));
  expect_value(report, "materialized x*y^2, x-from-y", sup_expect(pxy.credal(), xy2), T(0));
  expect_true(report, "y-from-x product is not x-from-y independent",
              !is_independent(pyx, ProductOrder::XFromY).independent);
  return report;
}

template <Scalar T>
ExampleReport reproduce_maximal_product(const std::vector<Point<T>>& gamma1, const std::vector<Point<T>>& gamma2) {
  if (gamma1.empty() || gamma2.empty()) throw InvalidInput("gamma sets must be nonempty");
  ExampleReport report{"maximal product", mode_of<T>(), {}};
  auto law = [](const std::vector<Point<T>>& gamma) {
    FiniteSupport<T> grid(gamma);
    std::vector<ProbabilityMeasure<T>> gens;
    for (std::size_t i = 0; i < grid.size(); ++i) gens.push_back(dirac(grid, i));
    return Distribution<T>(CredalSet<T>(grid, std::move(gens)));
  };
  MaximalPairReport r = check_maximal_pair(law(gamma1), law(gamma2));
  expect_true(report, "products coincide", r.hull_equal);
  expect_true(report, "y independent from x", r.independent_y_from_x);
  expect_true(report, "x independent from y", r.independent_x_from_y);
  expect_true(report, "joint maximal", r.joint_maximal);
  expect_true(report, "joint gamma is gamma1 x gamma2", r.gamma_is_product);
  return report;
}

template <Scalar T>
ProbeReport probe_weak_vs_full(const TrialConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  ProbeReport report;
  report.mode = mode_of<T>();
  report.trials = config.trials;

  for (std::size_t t = 0; t < config.trials; ++t) {
    Xorshift64Star rng(derive_seed(config.seed, t));
    Distribution<T> dx = random_distribution<T>(rng, config);
    Distribution<T> dy = random_distribution<T>(rng, config);
    const std::uint64_t weak_seed = rng.next();

    auto examine = [&](const std::string& family, const JointDistribution<T>& joint, ProductOrder order,
                       bool control) {
      ++report.joints_examined;
      ++report.family_counts[family];
      WeakVerdict<T> weak = is_weakly_independent(joint, order, config.weak_trials, weak_seed, config.tolerance);
      if (weak.falsified) {
        ++report.weak_falsified;
        return;
      }
      ++report.weak_passed;
      IndependenceVerdict<T> full = is_independent(joint, order, CheckMode::Certificate);
      if (full.independent) return;
      ++report.candidates;
      if (control) ++report.control_failures;
      report.candidate_instances.push_back({{"trial", t},
                                            {"family", family},
                                            {"order", std::string(to_string(order))},
                                            {"joint", jio::to_json(joint)},
                                            {"verdict", jio::to_json(full)}});
    };

    Distribution<T> lx(CredalSet<T>(dx.grid(), {dx.credal().generators().front()}));
    Distribution<T> ly(CredalSet<T>(dy.grid(), {dy.credal().generators().front()}));
    JointDistribution<T> classical = peng_product(lx, ly, ProductOrder::YFromX);
    examine("classical", classical, ProductOrder::YFromX, true);
    examine("classical", classical, ProductOrder::XFromY, true);

    JointDistribution<T> yx = peng_product(dx, dy, ProductOrder::YFromX);
    JointDistribution<T> xy = peng_product(dx, dy, ProductOrder::XFromY);
    examine("peng-own-order", yx, ProductOrder::YFromX, true);
    examine("peng-own-order", xy, ProductOrder::XFromY, true);
    examine("peng-opposite-order", yx, ProductOrder::XFromY, false);
    examine("peng-opposite-order", xy, ProductOrder::YFromX, false);

    std::vector<ProbabilityMeasure<T>> both = yx.credal().generators();
    both.insert(both.end(), xy.credal().generators().begin(), xy.credal().generators().end());
    JointDistribution<T> uni(dx.grid(), dy.grid(), CredalSet<T>(yx.support(), std::move(both)));
    examine("union", uni, ProductOrder::YFromX, false);
    examine("union", uni, ProductOrder::XFromY, false);

    std::vector<std::size_t> all(yx.support().size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<ProbabilityMeasure<T>> gens;
    const std::size_t k = pick(rng, config.generator_count_range);
    for (std::size_t g = 0; g < k; ++g) gens.push_back(random_fraction_measure(rng, yx.support(), all));
    JointDistribution<T> random_joint(dx.grid(), dy.grid(), CredalSet<T>(yx.support(), std::move(gens)));
    examine("random-joint", random_joint, ProductOrder::YFromX, false);
    examine("random-joint", random_joint, ProductOrder::XFromY, false);
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

Json to_json(const ProbeReport& r) {
  return Json{{"mode", std::string(to_string(r.mode))},
              {"trials", r.trials},
              {"joints_examined", r.joints_examined},
              {"weak_falsified", r.weak_falsified},
              {"weak_passed", r.weak_passed},
              {"candidates", r.candidates},
              {"control_failures", r.control_failures},
              {"family_counts", r.family_counts},
              {"candidate_instances", r.candidate_instances},
              {"wall_seconds", r.wall_seconds}};
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

#define SUBLINEAR_INSTANTIATE(T)                                                                               \
  template Distribution<T> random_distribution<T>(Xorshift64Star&, const TrialConfig&, DrawStyle);            \
  template Distribution<T> random_distribution<T>(std::uint64_t, const TrialConfig&, DrawStyle);              \
  template Distribution<T> random_maximal_distribution<T>(Xorshift64Star&, std::size_t);                      \
  template MaximalPairReport check_maximal_pair<T>(const Distribution<T>&, const Distribution<T>&);            \
  template ExampleReport reproduce_example_xy2<T>();                                                          \
  template ExampleReport reproduce_maximal_product<T>(const std::vector<Point<T>>&, const std::vector<Point<T>>&); \
  template ProbeReport probe_weak_vs_full<T>(const TrialConfig&);

SUBLINEAR_INSTANTIATE(Rational)
SUBLINEAR_INSTANTIATE(double)

#undef SUBLINEAR_INSTANTIATE

}  // namespace sublinear
