#pragma once

#include "sublinear/independence.hpp"
#include "sublinear/measure.hpp"
#include "sublinear/scalar.hpp"
#include "sublinear/space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sublinear {

/// Verdict of the Dirac-vertex test. Exactly one of gamma / violator is set.
/// On a finite grid every subset is closed, so gamma is used as is.
template <Scalar T>
struct MaximalityCertificate {
  bool maximal = false;
  Mode mode = mode_of<T>();
  std::vector<Point<T>> gamma;                 // support points of the Dirac vertices
  std::vector<std::size_t> gamma_indices;      // their grid indices
  std::optional<ProbabilityMeasure<T>> violator;  // a non-Dirac vertex
};

/// Maximal iff every vertex of the credal hull is a Dirac measure; then
/// E[phi] = max over gamma of phi for every table phi.
template <Scalar T>
MaximalityCertificate<T> is_maximal(const Distribution<T>& d);

/// a -> a^+ - epsilon a^-, the upper expectation of a * phi* for the
/// uncertainty witness phi*.
template <Scalar T>
class GMap {
 public:
  explicit GMap(T epsilon);

  const T& epsilon() const { return epsilon_; }

  T operator()(const T& a) const { return positive_part(a) - epsilon_ * negative_part(a); }

 private:
  T epsilon_;
};

template <Scalar T>
T g_map(const T& a, const GMap<T>& g) {
  return g(a);
}

/// Closed form of the n-fold composition: a^+ - epsilon^n a^-.
template <Scalar T>
T g_iterate(const T& a, const GMap<T>& g, std::uint64_t n);

/// Iteration count for the limit step: the smallest n with
/// epsilon^n * max(1, bound) <= tolerance (1 when epsilon is 0).
std::uint64_t limit_iterations(double epsilon, double bound, double tolerance);

struct Lemma2Failure {
  std::size_t sample = 0;
  std::string identity;
  std::string detail;
};

template <Scalar T>
struct Lemma2Report {
  Mode mode = mode_of<T>();
  T epsilon{};
  std::size_t witness_index = 0;
  std::size_t samples = 0;
  std::size_t checks = 0;
  std::uint64_t max_limit_iterations = 0;
  std::vector<Lemma2Failure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks, for sampled psi on gridY, the chain of identities behind the
/// collapse E[(psi(Y) - E[psi(Y)])^+] = 0:
///   outer-x     E[phi*(X) psi(Y)] (Y from X) = G(E[psi(Y)])
///   outer-y     E[phi*(X) psi(Y)] (X from Y) = E[G(psi(Y))]
///   g-commutes  E[G(psi(Y))] = G(E[psi(Y)])
///   g-iterate   E[G^n(psi(Y))] = G^n(E[psi(Y)]) for n = 1..n_max
///   limit       E[psi^+(Y)] = (E[psi(Y)])^+ within `tolerance`, with n picked from
///               the error bound epsilon^n E[psi^-(Y)]
///   collapse    E[(psi - E[psi])^+] = 0, and the capacity of
///               {y : psi(y) > E[psi(Y)]} is 0.
/// Throws HypothesisViolated unless dX carries uncertainty and the two Peng
/// products of (dX, dY) coincide.
template <Scalar T>
Lemma2Report<T> verify_lemma2(const Distribution<T>& dx, const Distribution<T>& dy, std::size_t psi_samples,
                              std::uint64_t n_max, std::uint64_t seed, double tolerance = 1e-9);

}  // namespace sublinear
