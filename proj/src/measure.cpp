#include "sublinear/measure.hpp"

#include "sublinear/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace sublinear {

template <Scalar T>
bool same_point(const Point<T>& a, const Point<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!ScalarTraits<T>::same_point_coord(a[k], b[k])) return false;
  return true;
}

template <Scalar T>
FiniteSupport<T>::FiniteSupport(std::vector<Point<T>> points) {
  if (points.empty()) throw InvalidInput("support must be nonempty");
  const std::size_t d = points.front().size();
  if (d == 0) throw InvalidInput("support points must have dimension >= 1");
  for (const auto& p : points) {
    if (p.size() != d) throw DimensionMismatch("support points have differing dimensions");
    if constexpr (std::same_as<T, double>) {
      for (double c : p)
        if (!std::isfinite(c)) throw InvalidInput("support coordinates must be finite");
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (same_point(points[i], points[j]))
        throw InvalidInput("support points " + std::to_string(i) + " and " + std::to_string(j) +
                           " coincide");
  points_ = std::make_shared<const std::vector<Point<T>>>(std::move(points));
}

template <Scalar T>
FiniteSupport<T> FiniteSupport<T>::line(const std::vector<T>& values) {
  std::vector<Point<T>> points;
  points.reserve(values.size());
  for (const auto& v : values) points.push_back({v});
  return FiniteSupport(std::move(points));
}

template <Scalar T>
std::size_t FiniteSupport<T>::find(const Point<T>& p) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (same_point((*points_)[i], p)) return i;
  return size();
}

template <Scalar T>
bool FiniteSupport<T>::operator==(const FiniteSupport& other) const {
  if (points_ == other.points_) return true;
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if ((*points_)[i] != (*other.points_)[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ValueTable

template <Scalar T>
ValueTable<T>::ValueTable(FiniteSupport<T> support, std::vector<T> values)
    : support_(std::move(support)), values_(std::move(values)) {
  if (values_.size() != support_.size())
    throw DimensionMismatch("value table has " + std::to_string(values_.size()) + " entries for a support of " +
                            std::to_string(support_.size()));
  if constexpr (std::same_as<T, double>) {
    for (double v : values_)
      if (!std::isfinite(v)) throw InvalidInput("value table entries must be finite");
  }
}

template <Scalar T>
ValueTable<T> ValueTable<T>::constant(FiniteSupport<T> support, const T& c) {
  std::vector<T> values(support.size(), c);
  return ValueTable(std::move(support), std::move(values));
}

template <Scalar T>
ValueTable<T> ValueTable<T>::indicator(FiniteSupport<T> support, std::span<const std::size_t> indices) {
  std::vector<T> values(support.size(), T(0));
  for (std::size_t i : indices) {
    if (i >= values.size()) throw IndexOutOfRange("indicator index " + std::to_string(i) + " out of range");
    values[i] = T(1);
  }
  return ValueTable(std::move(support), std::move(values));
}

template <Scalar T>
ValueTable<T> ValueTable<T>::from_function(FiniteSupport<T> support,
                                           const std::function<T(const Point<T>&)>& f) {
  std::vector<T> values;
  values.reserve(support.size());
  for (const auto& p : support.points()) values.push_back(f(p));
  return ValueTable(std::move(support), std::move(values));
}

template <Scalar T>
ValueTable<T> ValueTable<T>::map(const std::function<T(const T&)>& f) const {
  std::vector<T> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(f(v));
  return ValueTable(support_, std::move(out));
}

template <Scalar T>
ValueTable<T> ValueTable<T>::operator-() const {
  return map([](const T& v) { return T(-v); });
}

template <Scalar T>
ValueTable<T> ValueTable<T>::operator+(const ValueTable& other) const {
  if (!(support_ == other.support_)) throw SupportMismatch("adding tables on different supports");
  std::vector<T> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] + other.values_[i];
  return ValueTable(support_, std::move(out));
}

template <Scalar T>
ValueTable<T> ValueTable<T>::operator-(const ValueTable& other) const {
  return *this + (-other);
}

template <Scalar T>
ValueTable<T> ValueTable<T>::operator+(const T& c) const {
  return map([&c](const T& v) { return T(v + c); });
}

template <Scalar T>
ValueTable<T> ValueTable<T>::operator*(const T& c) const {
  return map([&c](const T& v) { return T(v * c); });
}

template <Scalar T>
ValueTable<T> ValueTable<T>::operator*(const ValueTable& other) const {
  if (!(support_ == other.support_)) throw SupportMismatch("multiplying tables on different supports");
  std::vector<T> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] * other.values_[i];
  return ValueTable(support_, std::move(out));
}

template <Scalar T>
bool ValueTable<T>::dominates(const ValueTable& other) const {
  if (!(support_ == other.support_)) throw SupportMismatch("comparing tables on different supports");
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] < other.values_[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// ProbabilityMeasure / CredalSet

template <Scalar T>
ProbabilityMeasure<T> ProbabilityMeasure<T>::make(FiniteSupport<T> support, std::vector<T> weights) {
  if (weights.size() != support.size())
    throw DimensionMismatch("measure has " + std::to_string(weights.size()) + " weights for a support of " +
                            std::to_string(support.size()));
  T total(0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if constexpr (std::same_as<T, double>) {
      if (!std::isfinite(weights[i])) throw InvalidInput("measure weights must be finite");
    }
    if (weights[i] < 0) throw NegativeWeight("weight " + std::to_string(i) + " is negative");
    total += weights[i];
  }
  if (!ScalarTraits<T>::normalized(total)) throw NotNormalized("weights sum to " + std::to_string(to_double(total)));
  return ProbabilityMeasure(std::move(support), std::move(weights));
}

template <Scalar T>
ProbabilityMeasure<T> ProbabilityMeasure<T>::unvalidated(FiniteSupport<T> support, std::vector<T> weights) {
  if (weights.size() != support.size()) throw DimensionMismatch("measure length does not match support");
  return ProbabilityMeasure(std::move(support), std::move(weights));
}

template <Scalar T>
std::optional<std::size_t> ProbabilityMeasure<T>::dirac_index() const {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (ScalarTraits<T>::is_zero(weights_[i])) continue;
    if (hit || !ScalarTraits<T>::equal(weights_[i], T(1))) return std::nullopt;
    hit = i;
  }
  return hit;
}

template <Scalar T>
CredalSet<T>::CredalSet(FiniteSupport<T> support, std::vector<ProbabilityMeasure<T>> generators)
    : support_(std::move(support)), generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("credal set needs at least one generator");
  for (const auto& g : generators_)
    if (!(g.support() == support_)) throw SupportMismatch("generator support differs from credal set support");
}

template <Scalar T>
std::vector<Point<T>> CredalSet<T>::weight_vectors() const {
  std::vector<Point<T>> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g.weights());
  return out;
}

// ---------------------------------------------------------------------------
// Operations

template <Scalar T>
ProbabilityMeasure<T> make_measure(FiniteSupport<T> support, std::vector<T> weights) {
  return ProbabilityMeasure<T>::make(std::move(support), std::move(weights));
}

template <Scalar T>
ProbabilityMeasure<T> dirac(FiniteSupport<T> support, std::size_t index) {
  if (index >= support.size())
    throw IndexOutOfRange("dirac index " + std::to_string(index) + " on a support of " +
                          std::to_string(support.size()));
  std::vector<T> weights(support.size(), T(0));
  weights[index] = T(1);
  return ProbabilityMeasure<T>::make(std::move(support), std::move(weights));
}

template <Scalar T>
T expect(const ProbabilityMeasure<T>& p, const ValueTable<T>& f) {
  if (!(p.support() == f.support())) throw SupportMismatch("measure and table live on different supports");
  T total(0);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) total += p[i] * f[i];
  return total;
}

template <Scalar T>
T sup_expect(const CredalSet<T>& m, const ValueTable<T>& f) {
  if (!(m.support() == f.support())) throw SupportMismatch("credal set and table live on different supports");
  const auto& gens = m.generators();
  T best = expect(gens.front(), f);
  for (std::size_t k = 1; k < gens.size(); ++k) {
    T v = expect(gens[k], f);
    if (v > best) best = std::move(v);
  }
  return best;
}

template <Scalar T>
SupEvaluator<T>::SupEvaluator(CredalSet<T> m) : credal_(std::move(m)) {
  if constexpr (std::same_as<T, Rational>) {
    approx_.reserve(credal_.size() * credal_.support().size());
    for (const auto& g : credal_.generators())
      for (const auto& w : g.weights()) approx_.push_back(w.template convert_to<double>());
  }
}

template <Scalar T>
T SupEvaluator<T>::operator()(const ValueTable<T>& f) const {
  if constexpr (std::same_as<T, double>) {
    return sup_expect(credal_, f);
  } else {
    if (!(credal_.support() == f.support())) throw SupportMismatch("credal set and table live on different supports");
    const std::size_t n = f.size();
    std::vector<double> fv(n);
    double scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      fv[i] = f[i].template convert_to<double>();
      scale = std::max(scale, std::abs(fv[i]));
    }
    const auto& gens = credal_.generators();
    std::vector<double> approx(gens.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      double s = 0;
      const double* w = approx_.data() + k * n;
      for (std::size_t i = 0; i < n; ++i) s += w[i] * fv[i];
      approx[k] = s;
      top = std::max(top, s);
    }
    // Rounding in conversion and summation is below 1e-13 * scale per
    // generator; the margin leaves several orders of magnitude of slack.
    const double margin = 1e-7 * scale;
    std::optional<T> best;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (approx[k] < top - margin) continue;
      T v = expect(gens[k], f);
      if (!best || v > *best) best = std::move(v);
    }
    return *best;
  }
}

template <Scalar T>
T capacity(const CredalSet<T>& m, std::span<const std::size_t> subset) {
  return sup_expect(m, ValueTable<T>::indicator(m.support(), subset));
}

template <Scalar T>
CredalSet<T> pushforward(const CredalSet<T>& m, const FiniteSupport<T>& target,
                         std::span<const std::size_t> index_map) {
  if (index_map.size() != m.support().size())
    throw DimensionMismatch("pushforward map must be total on the source support");
  for (std::size_t t : index_map)
    if (t >= target.size()) throw IndexOutOfRange("pushforward target index out of range");
  std::vector<ProbabilityMeasure<T>> gens;
  gens.reserve(m.size());
  for (const auto& g : m.generators()) {
    std::vector<T> w(target.size(), T(0));
    for (std::size_t i = 0; i < g.size(); ++i) w[index_map[i]] += g[i];
    gens.push_back(ProbabilityMeasure<T>::unvalidated(target, std::move(w)));
  }
  return CredalSet<T>(target, std::move(gens));
}

template <Scalar T>
SupportImage<T> image_support(const std::vector<Point<T>>& images) {
  std::vector<Point<T>> distinct;
  std::vector<std::size_t> index_map;
  index_map.reserve(images.size());
  for (const auto& p : images) {
    std::size_t k = 0;
    while (k < distinct.size() && !same_point(distinct[k], p)) ++k;
    if (k == distinct.size()) distinct.push_back(p);
    index_map.push_back(k);
  }
  return {FiniteSupport<T>(std::move(distinct)), std::move(index_map)};
}

#define SUBLINEAR_INSTANTIATE(T)                                                                    \
  template bool same_point<T>(const Point<T>&, const Point<T>&);                                   \
  template class FiniteSupport<T>;                                                                  \
  template class ValueTable<T>;                                                                     \
  template class ProbabilityMeasure<T>;                                                             \
  template class CredalSet<T>;                                                                      \
  template ProbabilityMeasure<T> make_measure<T>(FiniteSupport<T>, std::vector<T>);                 \
  template ProbabilityMeasure<T> dirac<T>(FiniteSupport<T>, std::size_t);                           \
  template T expect<T>(const ProbabilityMeasure<T>&, const ValueTable<T>&);                         \
  template T sup_expect<T>(const CredalSet<T>&, const ValueTable<T>&);                              \
  template class SupEvaluator<T>;                                                                   \
  template T capacity<T>(const CredalSet<T>&, std::span<const std::size_t>);                        \
  template CredalSet<T> pushforward<T>(const CredalSet<T>&, const FiniteSupport<T>&,                \
                                       std::span<const std::size_t>);                               \
  template SupportImage<T> image_support<T>(const std::vector<Point<T>>&);

SUBLINEAR_INSTANTIATE(Rational)
SUBLINEAR_INSTANTIATE(double)

#undef SUBLINEAR_INSTANTIATE

}  // namespace sublinear
