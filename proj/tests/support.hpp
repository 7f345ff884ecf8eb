#pragma once

#include "sublinear/measure.hpp"
#include "sublinear/random.hpp"
#include "sublinear/space.hpp"

#include <initializer_list>
#include <vector>

namespace testing {

using sublinear::CredalSet;
using sublinear::Distribution;
using sublinear::FiniteSupport;
using sublinear::ProbabilityMeasure;
using sublinear::Rational;
using sublinear::ValueTable;

inline Rational q(long num, long den = 1) { return Rational(num, den); }

template <class T>
FiniteSupport<T> line(std::initializer_list<long> xs) {
  std::vector<T> v;
  for (long x : xs) v.push_back(T(x));
  return FiniteSupport<T>::line(v);
}

template <class T>
CredalSet<T> credal(const FiniteSupport<T>& grid, std::vector<std::vector<T>> weights) {
  std::vector<ProbabilityMeasure<T>> gens;
  for (auto& w : weights) gens.push_back(sublinear::make_measure(grid, std::move(w)));
  return CredalSet<T>(grid, std::move(gens));
}

template <class T>
Distribution<T> law(const FiniteSupport<T>& grid, std::vector<std::vector<T>> weights) {
  return Distribution<T>(credal(grid, std::move(weights)));
}

template <class T>
T frac(long num, long den) {
  return sublinear::ratio<T>(num, den);
}

/// The three-point law used throughout: grid {-1, 0, 1}, generators
/// (1/4, 1/2, 1/4) and (2/5, 1/5, 2/5).
template <class T>
Distribution<T> three_point() {
  auto g = line<T>({-1, 0, 1});
  return law<T>(g, {{frac<T>(1, 4), frac<T>(1, 2), frac<T>(1, 4)}, {frac<T>(2, 5), frac<T>(1, 5), frac<T>(2, 5)}});
}

template <class T>
Distribution<T> dirac_law(const FiniteSupport<T>& grid) {
  std::vector<ProbabilityMeasure<T>> gens;
  for (std::size_t i = 0; i < grid.size(); ++i) gens.push_back(sublinear::dirac(grid, i));
  return Distribution<T>(CredalSet<T>(grid, std::move(gens)));
}

template <class T>
ValueTable<T> random_table(const FiniteSupport<T>& s, sublinear::Xorshift64Star& rng, long lo = -1, long hi = 1) {
  std::vector<T> v;
  for (std::size_t i = 0; i < s.size(); ++i) v.push_back(sublinear::sample_uniform<T>(rng, lo, hi));
  return ValueTable<T>(s, std::move(v));
}

/// Brute-force max over generators, written independently of the library.
template <class T>
T brute_sup(const CredalSet<T>& m, const ValueTable<T>& f) {
  T best{};
  bool first = true;
  for (const auto& g : m.generators()) {
    T s(0);
    for (std::size_t i = 0; i < f.size(); ++i) s += g[i] * f[i];
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

}  // namespace testing
