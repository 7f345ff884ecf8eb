#pragma once

#include "sublinear/independence.hpp"
#include "sublinear/maximality.hpp"
#include "sublinear/random.hpp"
#include "sublinear/scalar.hpp"
#include "sublinear/space.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sublinear {

struct TrialConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::pair<std::size_t, std::size_t> grid_size_range{2, 6};
  std::pair<std::size_t, std::size_t> generator_count_range{1, 4};
  Mode mode = Mode::Rational;
  double tolerance = 1e-9;
  std::size_t forward_trials = 200;  // maximal pairs in the forward check
  std::size_t max_gamma = 5;         // largest Dirac vertex set in those pairs
  std::size_t weak_trials = 200;     // random table pairs per weak-independence probe

  /// Throws InvalidInput when a range is empty or exceeds the product size guard.
  void validate() const;
};

nlohmann::json to_json(const TrialConfig& config);
/// Missing keys keep their defaults.
TrialConfig config_from_json(const nlohmann::json& j);

enum class DrawStyle {
  General,  // arbitrary generators with weights k/q, q <= 16
  Maximal,  // Dirac generators, sometimes with an interior mixture of them
};

/// Random law on a grid of distinct integers in [-5, 5]. Every weight is a
/// fraction with denominator at most 16, so rational and float runs see the
/// same instance and all flags are decided exactly.
template <Scalar T>
Distribution<T> random_distribution(Xorshift64Star& rng, const TrialConfig& config,
                                    DrawStyle style = DrawStyle::General);
template <Scalar T>
Distribution<T> random_distribution(std::uint64_t seed, const TrialConfig& config,
                                    DrawStyle style = DrawStyle::General);

/// Maximal law whose grid is exactly its Dirac vertex set, of size 1..max_gamma.
template <Scalar T>
Distribution<T> random_maximal_distribution(Xorshift64Star& rng, std::size_t max_gamma);

struct TrialRecord {
  std::size_t index = 0;
  std::string digest;  // FNV-1a of the serialized instance
  bool x_uncertain = false;
  bool y_uncertain = false;
  bool x_constant = false;
  bool y_constant = false;
  bool x_maximal = false;
  bool y_maximal = false;
  bool hypothesis = false;  // X uncertain and Y not constant
  bool mutual = false;      // the two Peng products coincide
  bool consistent = true;   // hull verdict and witness agree
  bool counterexample = false;
  std::string reason;
  std::optional<nlohmann::json> witness;  // {"table", "values"} when the products differ
  nlohmann::json instance;                // {"x": distribution, "y": distribution}
  std::size_t discarded = 0;              // draws rejected before this instance
};

/// Classifies one pair: flags, both Peng products, hull comparison, and the
/// separating table re-evaluated through both materialized products and both
/// nested evaluations.
TrialRecord evaluate_pair(const Distribution<Rational>& dx, const Distribution<Rational>& dy);

struct MaximalPairReport {
  bool hull_equal = false;
  bool independent_y_from_x = false;
  bool independent_x_from_y = false;
  bool joint_maximal = false;
  bool gamma_is_product = false;
  std::size_t joint_gamma_size = 0;
  bool ok() const {
    return hull_equal && independent_y_from_x && independent_x_from_y && joint_maximal && gamma_is_product;
  }
};

template <Scalar T>
MaximalPairReport check_maximal_pair(const Distribution<T>& dx, const Distribution<T>& dy);

struct TrialReport {
  std::size_t trials = 0;
  std::vector<TrialRecord> records;
  std::size_t counterexamples = 0;
  std::size_t discarded = 0;
  std::size_t mutual = 0;
  std::size_t non_maximal = 0;
  std::size_t forward_trials = 0;
  std::size_t forward_failures = 0;
  std::vector<nlohmann::json> forward_failure_instances;
  double wall_seconds = 0;
  bool ok() const { return counterexamples == 0 && forward_failures == 0; }
};

/// Randomized check that mutual independence forces both marginals to be
/// maximal, plus the forward direction on random maximal pairs. Rational
/// mode only; a float config throws InvalidInput.
TrialReport verify_theorem(const TrialConfig& config);

nlohmann::json to_json(const TrialRecord& r);
/// `full` includes every record; otherwise only counterexamples.
nlohmann::json to_json(const TrialReport& r, bool full = false);

struct ExampleCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ExampleReport {
  std::string name;
  Mode mode = Mode::Rational;
  std::vector<ExampleCheck> checks;
  bool ok() const;
};

nlohmann::json to_json(const ExampleReport& r);

/// The x * y^2 asymmetry on grid {-1, 0, 1} with generators (1/4, 1/2, 1/4)
/// and (2/5, 1/5, 2/5). Float mode compares within 1e-9.
template <Scalar T>
ExampleReport reproduce_example_xy2();

/// Dirac marginals on gamma1 and gamma2: both products coincide, both orders
/// are independent and the joint is maximal on gamma1 x gamma2.
template <Scalar T>
ExampleReport reproduce_maximal_product(const std::vector<Point<T>>& gamma1, const std::vector<Point<T>>& gamma2);

struct ProbeReport {
  Mode mode = Mode::Rational;
  std::size_t trials = 0;
  std::size_t joints_examined = 0;
  std::size_t weak_falsified = 0;
  std::size_t weak_passed = 0;
  std::size_t candidates = 0;
  std::size_t control_failures = 0;  // a control family produced a candidate
  std::map<std::string, std::size_t> family_counts;
  std::vector<nlohmann::json> candidate_instances;
  double wall_seconds = 0;
};

/// Looks for joints that survive the product-table falsifier in some order
/// but fail the full certificate in that order. Families: classical products
/// and Peng products in their own order (controls), Peng products in the
/// opposite order, unions of both products, and random joints.
template <Scalar T>
ProbeReport probe_weak_vs_full(const TrialConfig& config);

nlohmann::json to_json(const ProbeReport& r);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& text);

}  // namespace sublinear
