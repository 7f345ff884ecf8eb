#include "sublinear/space.hpp"

#include "sublinear/errors.hpp"
#include "sublinear/random.hpp"

#include <sstream>

namespace sublinear {

template <Scalar T>
SublinearSpace<T>::SublinearSpace(FiniteSupport<T> omega, CredalSet<T> credal)
    : omega_(std::move(omega)), credal_(std::move(credal)) {
  if (!(credal_.support() == omega_)) throw SupportMismatch("credal set must live on omega");
}

template <Scalar T>
RandomVariable<T>::RandomVariable(SublinearSpace<T> space, std::vector<Point<T>> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.omega().size())
    throw DimensionMismatch("random variable must assign a value to every sample point");
  if (values_.empty() || values_.front().empty()) throw InvalidInput("random variable values must be nonempty");
  for (const auto& v : values_)
    if (v.size() != values_.front().size()) throw DimensionMismatch("random variable values mix dimensions");
}

template <Scalar T>
Distribution<T> distribution(const RandomVariable<T>& rv) {
  SupportImage<T> image = image_support(rv.values());
  return Distribution<T>(pushforward(rv.space().credal(), image.support, image.index_map));
}

template <Scalar T>
Distribution<T> map_distribution(const Distribution<T>& d, const std::function<Point<T>(const Point<T>&)>& h) {
  std::vector<Point<T>> images;
  images.reserve(d.grid().size());
  for (const auto& p : d.grid().points()) images.push_back(h(p));
  SupportImage<T> image = image_support(images);
  return Distribution<T>(pushforward(d.credal(), image.support, image.index_map));
}

template <Scalar T>
T sublinear_eval(const Distribution<T>& d, const ValueTable<T>& phi) {
  return sup_expect(d.credal(), phi);
}

template <Scalar T>
bool has_distributional_uncertainty(const Distribution<T>& d) {
  // Two distinct generators exist iff the hull has two distinct vertices.
  const auto& gens = d.credal().generators();
  for (std::size_t k = 1; k < gens.size(); ++k)
    if (!same_point(gens[k].weights(), gens.front().weights())) return true;
  return false;
}

template <Scalar T>
bool is_constant(const Distribution<T>& d) {
  return !has_distributional_uncertainty(d) && d.credal().generators().front().dirac_index().has_value();
}

template <Scalar T>
UncertaintyWitness<T> uncertainty_witness(const Distribution<T>& d) {
  const auto& gens = d.credal().generators();
  const std::size_t n = d.grid().size();
  for (std::size_t i = 0; i < n; ++i) {
    T hi = gens.front()[i];
    T lo = gens.front()[i];
    for (const auto& g : gens) {
      if (g[i] > hi) hi = g[i];
      if (g[i] < lo) lo = g[i];
    }
    if (!ScalarTraits<T>::positive(hi - lo)) continue;
    std::vector<T> values(n, T(0));
    values[i] = T(1) / hi;
    return {ValueTable<T>(d.grid(), std::move(values)), T(lo / hi), i};
  }
  throw NoUncertainty("distribution is a linear expectation; no uncertainty witness exists");
}

namespace {

template <Scalar T>
bool same_value(const T& a, const T& b) {
  return ScalarTraits<T>::equal(a, b);
}

template <Scalar T>
bool at_most(const T& a, const T& b) {
  if constexpr (std::same_as<T, Rational>) {
    return a <= b;
  } else {
    return a <= b + ScalarTraits<double>::tolerance;
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
ValueTable<T> random_table(const FiniteSupport<T>& s, Xorshift64Star& rng, std::int64_t lo, std::int64_t hi) {
  std::vector<T> v;
  v.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v.push_back(sample_uniform<T>(rng, lo, hi));
  return ValueTable<T>(s, std::move(v));
}

/// Grid points whose mass is the same under every generator.
template <Scalar T>
std::vector<std::size_t> determinate_points(const CredalSet<T>& m) {
  std::vector<std::size_t> out;
  const auto& gens = m.generators();
  for (std::size_t i = 0; i < m.support().size(); ++i) {
    bool fixed = true;
    for (const auto& g : gens) fixed = fixed && same_value(g[i], gens.front()[i]);
    if (fixed) out.push_back(i);
  }
  return out;
}

}  // namespace

template <Scalar T>
AxiomReport<T> check_axioms(const Distribution<T>& d, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidInput("check_axioms needs at least one trial");
  AxiomReport<T> report;
  report.trials = trials;
  const auto& grid = d.grid();
  const auto fixed_points = determinate_points(d.credal());
  auto value = [&](const ValueTable<T>& f) { return sublinear_eval(d, f); };

  Xorshift64Star rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    auto fail = [&](const std::string& what) {
      report.violations.push_back("trial " + std::to_string(trial) + ": " + what);
    };
    const ValueTable<T> f = random_table(grid, rng, -1, 1);
    const ValueTable<T> g = random_table(grid, rng, -1, 1);
    const ValueTable<T> bump = random_table(grid, rng, 0, 1);
    const T c = sample_uniform<T>(rng, -2, 2);
    const T lambda = sample_uniform<T>(rng, -2, 2);
    const T mu = sample_uniform<T>(rng, 0, 2);

    const T vf = value(f);
    const T vg = value(g);
    const T vneg_f = value(-f);

    // (a) monotonicity
    const ValueTable<T> above = f + bump;
    if (!at_most(vf, value(above))) fail("monotonicity: E[f+bump]=" + show(value(above)) + " < E[f]=" + show(vf));
    // (b) constant preserving
    const T vc = value(ValueTable<T>::constant(grid, c));
    if (!same_value(vc, c)) fail("constant preserving: E[" + show(c) + "]=" + show(vc));
    // (c) sub-additivity
    const T vfg = value(f + g);
    if (!at_most(vfg, T(vf + vg))) fail("sub-additivity: E[f+g]=" + show(vfg) + " > " + show(T(vf + vg)));
    // (d) positive homogeneity
    const T vmu = value(f * mu);
    if (!same_value(vmu, T(mu * vf))) fail("positive homogeneity at " + show(mu) + ": " + show(vmu));
    // signed homogeneity
    const T vlam = value(f * lambda);
    const T expected_lam = positive_part(lambda) * vf + negative_part(lambda) * vneg_f;
    if (!same_value(vlam, expected_lam))
      fail("signed homogeneity at " + show(lambda) + ": " + show(vlam) + " vs " + show(expected_lam));
    // translation
    const T vtrans = value(f + c);
    if (!same_value(vtrans, T(vf + c))) fail("translation by " + show(c) + ": " + show(vtrans));

    // Additivity against a table with no uncertainty: a constant plus any
    // combination of indicators of determinate points.
    std::vector<T> lin(grid.size(), sample_uniform<T>(rng, -1, 1));
    for (std::size_t i : fixed_points) lin[i] += sample_uniform<T>(rng, -1, 1);
    const ValueTable<T> h(grid, std::move(lin));
    const T vh = value(h);
    const T vneg_h = value(-h);
    report.checks += 7;
    if (!same_value(vh, T(-vneg_h))) {
      fail("linear-part table has E[h]=" + show(vh) + " but -E[-h]=" + show(T(-vneg_h)));
      continue;
    }
    const T vfh = value(f + h);
    if (!same_value(vfh, T(vf + vh))) fail("additivity with linear part: " + show(vfh) + " vs " + show(T(vf + vh)));
    ++report.checks;
  }
  return report;
}

#define SUBLINEAR_INSTANTIATE(T)                                                                          \
  template class SublinearSpace<T>;                                                                       \
  template class RandomVariable<T>;                                                                       \
  template Distribution<T> distribution<T>(const RandomVariable<T>&);                                     \
  template Distribution<T> map_distribution<T>(const Distribution<T>&,                                    \
                                               const std::function<Point<T>(const Point<T>&)>&);          \
  template T sublinear_eval<T>(const Distribution<T>&, const ValueTable<T>&);                             \
  template bool has_distributional_uncertainty<T>(const Distribution<T>&);                                \
  template bool is_constant<T>(const Distribution<T>&);                                                   \
  template UncertaintyWitness<T> uncertainty_witness<T>(const Distribution<T>&);                          \
  template AxiomReport<T> check_axioms<T>(const Distribution<T>&, std::size_t, std::uint64_t);

SUBLINEAR_INSTANTIATE(Rational)
SUBLINEAR_INSTANTIATE(double)

#undef SUBLINEAR_INSTANTIATE

}  // namespace sublinear
