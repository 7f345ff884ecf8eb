#pragma once

#include "sublinear/scalar.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace sublinear {

template <Scalar T>
using Point = std::vector<T>;

template <Scalar T>
bool same_point(const Point<T>& a, const Point<T>& b);

/// Ordered list of distinct points in R^d. Indices are stable identifiers;
/// coordinates are payload only. Copies share storage.
template <Scalar T>
class FiniteSupport {
 public:
  explicit FiniteSupport(std::vector<Point<T>> points);

  /// One-dimensional support from scalar values.
  static FiniteSupport line(const std::vector<T>& values);

  std::size_t size() const { return points_->size(); }
  std::size_t dimension() const { return points_->front().size(); }
  const Point<T>& operator[](std::size_t i) const { return (*points_)[i]; }
  const std::vector<Point<T>>& points() const { return *points_; }

  /// Position of a point (by same_point), or size() when absent.
  std::size_t find(const Point<T>& p) const;

  bool operator==(const FiniteSupport& other) const;

 private:
  std::shared_ptr<const std::vector<Point<T>>> points_;
};

template <Scalar T>
class ValueTable {
 public:
  ValueTable(FiniteSupport<T> support, std::vector<T> values);

  static ValueTable constant(FiniteSupport<T> support, const T& c);
  static ValueTable indicator(FiniteSupport<T> support, std::span<const std::size_t> indices);
  static ValueTable from_function(FiniteSupport<T> support, const std::function<T(const Point<T>&)>& f);

  const FiniteSupport<T>& support() const { return support_; }
  const std::vector<T>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const T& operator[](std::size_t i) const { return values_[i]; }

  ValueTable map(const std::function<T(const T&)>& f) const;
  ValueTable operator-() const;
  ValueTable operator+(const ValueTable& other) const;
  ValueTable operator-(const ValueTable& other) const;
  ValueTable operator+(const T& c) const;
  ValueTable operator*(const T& c) const;
  /// Pointwise product.
  ValueTable operator*(const ValueTable& other) const;
  /// Pointwise f >= g.
  bool dominates(const ValueTable& other) const;

 private:
  FiniteSupport<T> support_;
  std::vector<T> values_;
};

template <Scalar T>
class ProbabilityMeasure {
 public:
  /// Validating factory; see make_measure.
  static ProbabilityMeasure make(FiniteSupport<T> support, std::vector<T> weights);
  /// Skips the sign and normalization checks (lengths must still match).
  /// Exists for negative controls that need an invalid generator.
  static ProbabilityMeasure unvalidated(FiniteSupport<T> support, std::vector<T> weights);

  const FiniteSupport<T>& support() const { return support_; }
  const std::vector<T>& weights() const { return weights_; }
  const T& operator[](std::size_t i) const { return weights_[i]; }
  std::size_t size() const { return weights_.size(); }

  /// Index of the unit mass when this is a Dirac measure.
  std::optional<std::size_t> dirac_index() const;

 private:
  ProbabilityMeasure(FiniteSupport<T> support, std::vector<T> weights)
      : support_(std::move(support)), weights_(std::move(weights)) {}

  FiniteSupport<T> support_;
  std::vector<T> weights_;
};

/// Finitely generated credal set. The represented object is the convex hull
/// of the generators; generators are kept as given (no deduplication).
template <Scalar T>
class CredalSet {
 public:
  CredalSet(FiniteSupport<T> support, std::vector<ProbabilityMeasure<T>> generators);

  const FiniteSupport<T>& support() const { return support_; }
  const std::vector<ProbabilityMeasure<T>>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  /// Generator weight vectors, in generator order.
  std::vector<Point<T>> weight_vectors() const;

 private:
  FiniteSupport<T> support_;
  std::vector<ProbabilityMeasure<T>> generators_;
};

template <Scalar T>
ProbabilityMeasure<T> make_measure(FiniteSupport<T> support, std::vector<T> weights);

template <Scalar T>
ProbabilityMeasure<T> dirac(FiniteSupport<T> support, std::size_t index);

/// Linear expectation E_P[f].
template <Scalar T>
T expect(const ProbabilityMeasure<T>& p, const ValueTable<T>& f);

/// max over generators of E_P[f]; equals the sup over the hull.
template <Scalar T>
T sup_expect(const CredalSet<T>& m, const ValueTable<T>& f);

/// sup_expect for repeated evaluation against one credal set. Rational mode
/// screens generators in double precision, discards those provably below the
/// float maximum, and takes the exact maximum over the rest, so the value is
/// still exact.
template <Scalar T>
class SupEvaluator {
 public:
  explicit SupEvaluator(CredalSet<T> m);

  const CredalSet<T>& credal() const { return credal_; }
  T operator()(const ValueTable<T>& f) const;

 private:
  CredalSet<T> credal_;
  std::vector<double> approx_;  // row-major generator weights, rational mode only
};

/// Upper probability c(A) = sup_P P(A).
template <Scalar T>
T capacity(const CredalSet<T>& m, std::span<const std::size_t> subset);

/// Transports every generator along `index_map` (source index -> target
/// index). sup_expect over the result equals sup_expect of f∘map over m.
template <Scalar T>
CredalSet<T> pushforward(const CredalSet<T>& m, const FiniteSupport<T>& target,
                         std::span<const std::size_t> index_map);

/// Image of a support under a point map: the distinct image points in order of
/// first appearance plus the source->image index map.
template <Scalar T>
struct SupportImage {
  FiniteSupport<T> support;
  std::vector<std::size_t> index_map;
};

template <Scalar T>
SupportImage<T> image_support(const std::vector<Point<T>>& images);

}  // namespace sublinear
