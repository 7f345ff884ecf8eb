#pragma once

#include "sublinear/independence.hpp"
#include "sublinear/maximality.hpp"
#include "sublinear/measure.hpp"
#include "sublinear/scalar.hpp"
#include "sublinear/space.hpp"

#include "json.hpp"

namespace sublinear::json {

using nlohmann::json;

// Wire forms:
//   support      [[x, ...], ...]            (bare numbers accepted as 1-d points)
//   measure      {"weights": [...]}
//   credal set   {"support": ..., "generators": [measure, ...]}
//   value table  {"values": [...]}
//   space        {"omega": support, "credal": credal set}
//   rv           {"space": space, "values": [point, ...]}
//   distribution a space on its grid
//   joint        {"gridX": support, "gridY": support, "credal": credal set}
// Rational mode writes scalars as "p/q" strings and reads strings or numbers;
// float mode writes numbers and reads both.

template <Scalar T>
json scalar_to_json(const T& x);
template <Scalar T>
T scalar_from_json(const json& j);

template <Scalar T>
json to_json(const FiniteSupport<T>& s);
template <Scalar T>
FiniteSupport<T> support_from_json(const json& j);

template <Scalar T>
json to_json(const ProbabilityMeasure<T>& m);
template <Scalar T>
ProbabilityMeasure<T> measure_from_json(const json& j, const FiniteSupport<T>& support);

template <Scalar T>
json to_json(const CredalSet<T>& m);
/// `fallback` supplies the support when the object omits it.
template <Scalar T>
CredalSet<T> credal_from_json(const json& j, const FiniteSupport<T>* fallback = nullptr);

template <Scalar T>
json to_json(const ValueTable<T>& t);
template <Scalar T>
ValueTable<T> table_from_json(const json& j, const FiniteSupport<T>& support);

template <Scalar T>
json to_json(const SublinearSpace<T>& s);
template <Scalar T>
SublinearSpace<T> space_from_json(const json& j);

template <Scalar T>
RandomVariable<T> random_variable_from_json(const json& j);
template <Scalar T>
json to_json(const RandomVariable<T>& rv);

template <Scalar T>
json to_json(const Distribution<T>& d);
template <Scalar T>
Distribution<T> distribution_from_json(const json& j);

template <Scalar T>
json to_json(const JointDistribution<T>& joint);
template <Scalar T>
JointDistribution<T> joint_from_json(const json& j);

template <Scalar T>
json to_json(const MaximalityCertificate<T>& cert);
template <Scalar T>
json to_json(const IndependenceVerdict<T>& v);
template <Scalar T>
json to_json(const WeakVerdict<T>& v);
template <Scalar T>
json to_json(const Lemma2Report<T>& r);

/// Parses a document, mapping parse failures to InvalidInput.
json parse(const std::string& text);
json read_file(const std::string& path);

}  // namespace sublinear::json
