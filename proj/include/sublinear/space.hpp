#pragma once

#include "sublinear/measure.hpp"
#include "sublinear/scalar.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sublinear {

/// Finite sample space with a credal set on it: the sublinear expectation is
/// X -> sup over the credal hull of E_P[X], and every table on omega is a
/// random variable.
template <Scalar T>
class SublinearSpace {
 public:
  SublinearSpace(FiniteSupport<T> omega, CredalSet<T> credal);

  const FiniteSupport<T>& omega() const { return omega_; }
  const CredalSet<T>& credal() const { return credal_; }

  T expectation(const ValueTable<T>& x) const { return sup_expect(credal_, x); }

 private:
  FiniteSupport<T> omega_;
  CredalSet<T> credal_;
};

template <Scalar T>
class RandomVariable {
 public:
  /// `values[i]` is the realization at omega point i.
  RandomVariable(SublinearSpace<T> space, std::vector<Point<T>> values);

  const SublinearSpace<T>& space() const { return space_; }
  const std::vector<Point<T>>& values() const { return values_; }

 private:
  SublinearSpace<T> space_;
  std::vector<Point<T>> values_;
};

/// Law of a random variable: a credal set on the grid of its distinct values.
template <Scalar T>
class Distribution {
 public:
  explicit Distribution(CredalSet<T> credal) : credal_(std::move(credal)) {}

  const FiniteSupport<T>& grid() const { return credal_.support(); }
  const CredalSet<T>& credal() const { return credal_; }

 private:
  CredalSet<T> credal_;
};

template <Scalar T>
Distribution<T> distribution(const RandomVariable<T>& rv);

/// Law of h(X) given the law of X, with h acting on grid points.
template <Scalar T>
Distribution<T> map_distribution(const Distribution<T>& d, const std::function<Point<T>(const Point<T>&)>& h);

template <Scalar T>
T sublinear_eval(const Distribution<T>& d, const ValueTable<T>& phi);

/// The hull holds at least two distinct measures, i.e. the distribution is
/// not a linear expectation.
template <Scalar T>
bool has_distributional_uncertainty(const Distribution<T>& d);

/// The hull is a single Dirac measure.
template <Scalar T>
bool is_constant(const Distribution<T>& d);

template <Scalar T>
struct UncertaintyWitness {
  ValueTable<T> phi;      // phi >= 0 with upper expectation 1
  T epsilon;              // lower expectation of phi, in [0, 1)
  std::size_t index;      // grid point x0 carrying the indicator
};

/// Nonnegative table with upper expectation exactly 1 and lower expectation
/// below 1: the scaled indicator of the lowest-index grid point whose mass is
/// not determined by the credal set. Throws NoUncertainty for linear laws.
template <Scalar T>
UncertaintyWitness<T> uncertainty_witness(const Distribution<T>& d);

template <Scalar T>
struct AxiomReport {
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Randomized check of monotonicity, constant preservation, sub-additivity,
/// positive and signed homogeneity, translation and additivity against
/// linear-part tables. Table entries are drawn on [-1, 1], scalars on [-2, 2].
template <Scalar T>
AxiomReport<T> check_axioms(const Distribution<T>& d, std::size_t trials, std::uint64_t seed);

}  // namespace sublinear
