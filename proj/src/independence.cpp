#include "sublinear/independence.hpp"

#include "sublinear/errors.hpp"
#include "sublinear/random.hpp"

#include <string>

namespace sublinear {

std::string_view to_string(ProductOrder order) {
  return order == ProductOrder::YFromX ? "y-from-x" : "x-from-y";
}

ProductOrder parse_order(std::string_view text) {
  if (text == "y-from-x" || text == "Y_FROM_X") return ProductOrder::YFromX;
  if (text == "x-from-y" || text == "X_FROM_Y") return ProductOrder::XFromY;
  throw InvalidInput("unknown order '" + std::string(text) + "' (expected y-from-x|x-from-y)");
}

ProductOrder opposite(ProductOrder order) {
  return order == ProductOrder::YFromX ? ProductOrder::XFromY : ProductOrder::YFromX;
}

template <Scalar T>
FiniteSupport<T> product_support(const FiniteSupport<T>& grid_x, const FiniteSupport<T>& grid_y) {
  std::vector<Point<T>> pts;
  pts.reserve(grid_x.size() * grid_y.size());
  for (const auto& x : grid_x.points())
    for (const auto& y : grid_y.points()) {
      Point<T> p = x;
      p.insert(p.end(), y.begin(), y.end());
      pts.push_back(std::move(p));
    }
  return FiniteSupport<T>(std::move(pts));
}

template <Scalar T>
JointDistribution<T>::JointDistribution(FiniteSupport<T> grid_x, FiniteSupport<T> grid_y, CredalSet<T> credal)
    : grid_x_(std::move(grid_x)), grid_y_(std::move(grid_y)), credal_(std::move(credal)) {
  if (credal_.support().size() != grid_x_.size() * grid_y_.size())
    throw DimensionMismatch("joint support must have |gridX| * |gridY| points");
  if (credal_.support().dimension() != grid_x_.dimension() + grid_y_.dimension())
    throw DimensionMismatch("joint support points must concatenate x and y coordinates");
}

namespace {

/// Same hull, repeated generators dropped (order becomes lexicographic).
template <Scalar T>
CredalSet<T> distinct_generators(const CredalSet<T>& m) {
  const PointSet<T> unique = unique_points(PointSet<T>::from_credal(m));
  std::vector<ProbabilityMeasure<T>> gens;
  gens.reserve(unique.size());
  for (const auto& w : unique.points()) gens.push_back(ProbabilityMeasure<T>::unvalidated(m.support(), w));
  return CredalSet<T>(m.support(), std::move(gens));
}

}  // namespace

template <Scalar T>
Distribution<T> JointDistribution<T>::marginal_x() const {
  const std::size_t ny = grid_y_.size();
  std::vector<std::size_t> map(credal_.support().size());
  for (std::size_t k = 0; k < map.size(); ++k) map[k] = k / ny;
  return Distribution<T>(distinct_generators(pushforward(credal_, grid_x_, map)));
}

template <Scalar T>
Distribution<T> JointDistribution<T>::marginal_y() const {
  const std::size_t ny = grid_y_.size();
  std::vector<std::size_t> map(credal_.support().size());
  for (std::size_t k = 0; k < map.size(); ++k) map[k] = k % ny;
  return Distribution<T>(distinct_generators(pushforward(credal_, grid_y_, map)));
}

template <Scalar T>
ValueTable<T> product_table(const FiniteSupport<T>& grid_x, const FiniteSupport<T>& grid_y,
                            const std::function<T(const Point<T>&, const Point<T>&)>& phi) {
  std::vector<T> values;
  values.reserve(grid_x.size() * grid_y.size());
  for (const auto& x : grid_x.points())
    for (const auto& y : grid_y.points()) values.push_back(phi(x, y));
  return ValueTable<T>(product_support(grid_x, grid_y), std::move(values));
}

template <Scalar T>
T nested_expect(const Distribution<T>& dx, const Distribution<T>& dy, const ValueTable<T>& phi, ProductOrder order) {
  const std::size_t nx = dx.grid().size();
  const std::size_t ny = dy.grid().size();
  if (phi.size() != nx * ny)
    throw DimensionMismatch("table has " + std::to_string(phi.size()) + " entries for a " + std::to_string(nx) +
                            "x" + std::to_string(ny) + " product grid");
  if (order == ProductOrder::YFromX) {
    std::vector<T> outer(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      std::vector<T> row(phi.values().begin() + static_cast<std::ptrdiff_t>(i * ny),
                         phi.values().begin() + static_cast<std::ptrdiff_t>((i + 1) * ny));
      outer[i] = sup_expect(dy.credal(), ValueTable<T>(dy.grid(), std::move(row)));
    }
    return sup_expect(dx.credal(), ValueTable<T>(dx.grid(), std::move(outer)));
  }
  std::vector<T> outer(ny);
  for (std::size_t j = 0; j < ny; ++j) {
    std::vector<T> col(nx);
    for (std::size_t i = 0; i < nx; ++i) col[i] = phi[i * ny + j];
    outer[j] = sup_expect(dx.credal(), ValueTable<T>(dx.grid(), std::move(col)));
  }
  return sup_expect(dy.credal(), ValueTable<T>(dy.grid(), std::move(outer)));
}

template <Scalar T>
JointDistribution<T> peng_product(const Distribution<T>& dx, const Distribution<T>& dy, ProductOrder order) {
  const bool outer_is_x = order == ProductOrder::YFromX;
  const Distribution<T>& outer = outer_is_x ? dx : dy;
  const Distribution<T>& inner = outer_is_x ? dy : dx;
  const std::size_t nx = dx.grid().size();
  const std::size_t ny = dy.grid().size();

  if (outer.grid().size() > kMaxOuterGrid)
    throw SizeGuardExceeded("outer grid has " + std::to_string(outer.grid().size()) + " points (limit " +
                            std::to_string(kMaxOuterGrid) + ")");

  const PointSet<T> outer_vertices = vertices(PointSet<T>::from_credal(outer.credal()));
  const PointSet<T> inner_vertices = vertices(PointSet<T>::from_credal(inner.credal()));
  const std::size_t nv = inner_vertices.size();

  const FiniteSupport<T> support = product_support(dx.grid(), dy.grid());
  std::vector<ProbabilityMeasure<T>> gens;

  for (const auto& p : outer_vertices.points()) {
    std::vector<std::size_t> charged;
    for (std::size_t o = 0; o < p.size(); ++o)
      if (p[o] != 0) charged.push_back(o);
    std::size_t selections = 1;
    for (std::size_t s = 0; s < charged.size(); ++s) {
      selections *= nv;
      if (selections > kMaxSelections)
        throw SizeGuardExceeded("Peng product would expand one outer vertex into more than " +
                                std::to_string(kMaxSelections) + " inner selections");
    }
    // Outer points without mass make the inner choice irrelevant, so only
    // charged points branch.
    std::vector<std::size_t> choice(charged.size(), 0);
    for (std::size_t sel = 0; sel < selections; ++sel) {
      std::vector<T> w(nx * ny, T(0));
      for (std::size_t s = 0; s < charged.size(); ++s) {
        const std::size_t o = charged[s];
        const Point<T>& q = inner_vertices[choice[s]];
        for (std::size_t r = 0; r < q.size(); ++r) {
          if (q[r] == 0) continue;
          const std::size_t idx = outer_is_x ? o * ny + r : r * ny + o;
          w[idx] = p[o] * q[r];
        }
      }
      gens.push_back(ProbabilityMeasure<T>::unvalidated(support, std::move(w)));
      for (std::size_t s = 0; s < choice.size(); ++s) {
        if (++choice[s] < nv) break;
        choice[s] = 0;
      }
    }
  }
  return JointDistribution<T>(dx.grid(), dy.grid(), CredalSet<T>(support, std::move(gens)));
}

namespace {

template <Scalar T>
bool differ(const T& a, const T& b, double tolerance) {
  if constexpr (std::same_as<T, Rational>) {
    return a != b;
  } else {
    return std::abs(a - b) > tolerance;
  }
}

template <Scalar T>
ValueTable<T> random_table(const FiniteSupport<T>& s, Xorshift64Star& rng) {
  std::vector<T> v;
  v.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v.push_back(sample_uniform<T>(rng, -1, 1));
  return ValueTable<T>(s, std::move(v));
}

template <Scalar T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <Scalar T>
T sign_of(const T& x) {
  return x > 0 ? T(1) : (x < 0 ? T(-1) : T(0));
}

/// Probe family on the product grid. The first coordinate of each grid point
/// stands in for the variable itself.
template <Scalar T>
std::vector<ValueTable<T>> structured_probes(const FiniteSupport<T>& gx, const FiniteSupport<T>& gy) {
  using Fn = std::function<T(const Point<T>&, const Point<T>&)>;
  std::vector<Fn> fns = {
      [](const Point<T>& x, const Point<T>& y) { return T(x[0] * y[0] * y[0]); },
      [](const Point<T>& x, const Point<T>& y) { return T(x[0] * y[0]); },
      [](const Point<T>& x, const Point<T>& y) { return T(positive_part(x[0]) * y[0]); },
      [](const Point<T>& x, const Point<T>& y) { return T(positive_part(x[0]) * y[0] * y[0]); },
      [](const Point<T>& x, const Point<T>& y) { return T(positive_part(x[0]) * abs_value(y[0])); },
      [](const Point<T>& x, const Point<T>& y) { return T(-positive_part(x[0]) * y[0]); },
      [](const Point<T>& x, const Point<T>& y) { return T(y[0] * x[0] * x[0]); },
      [](const Point<T>& x, const Point<T>& y) { return T(sign_of(x[0]) * sign_of(y[0])); },
  };
  std::vector<ValueTable<T>> out;
  for (const auto& f : fns) out.push_back(product_table(gx, gy, f));
  const FiniteSupport<T> s = product_support(gx, gy);
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::size_t idx[] = {k};
    ValueTable<T> ind = ValueTable<T>::indicator(s, idx);
    out.push_back(-ind);
    out.push_back(std::move(ind));
  }
  return out;
}

}  // namespace

template <Scalar T>
IndependenceVerdict<T> is_independent(const JointDistribution<T>& joint, ProductOrder which, CheckMode check,
                                      const ProbeOptions& probe) {
  const Distribution<T> mx = joint.marginal_x();
  const Distribution<T> my = joint.marginal_y();
  IndependenceVerdict<T> verdict;
  verdict.check = check;

  if (check == CheckMode::Certificate) {
    const JointDistribution<T> product = peng_product(mx, my, which);
    HullComparison<T> cmp =
        compare_hulls(PointSet<T>::from_credal(joint.credal()), PointSet<T>::from_credal(product.credal()));
    verdict.independent = cmp.equal;
    if (!cmp.equal) {
      ValueTable<T> w(joint.support(), std::move(*cmp.witness));
      verdict.joint_value = sup_expect(joint.credal(), w);
      verdict.product_value = nested_expect(mx, my, w, which);
      verdict.witness = std::move(w);
    }
    return verdict;
  }

  auto test = [&](ValueTable<T> phi) {
    ++verdict.tables_tried;
    T jv = sup_expect(joint.credal(), phi);
    T pv = nested_expect(mx, my, phi, which);
    if (!differ(jv, pv, probe.tolerance)) return false;
    verdict.independent = false;
    verdict.joint_value = std::move(jv);
    verdict.product_value = std::move(pv);
    verdict.witness = std::move(phi);
    return true;
  };
  for (auto& phi : structured_probes(joint.grid_x(), joint.grid_y()))
    if (test(ValueTable<T>(joint.support(), phi.values()))) return verdict;
  Xorshift64Star rng(probe.seed);
  for (std::size_t k = 0; k < probe.random_tables; ++k)
    if (test(random_table(joint.support(), rng))) return verdict;
  return verdict;
}

template <Scalar T>
WeakVerdict<T> is_weakly_independent(const JointDistribution<T>& joint, ProductOrder which, std::size_t trials,
                                     std::uint64_t seed, double tolerance) {
  if (trials == 0) throw InvalidInput("weak independence check needs at least one trial");
  const Distribution<T> mx = joint.marginal_x();
  const Distribution<T> my = joint.marginal_y();
  const auto& gx = joint.grid_x();
  const auto& gy = joint.grid_y();
  WeakVerdict<T> verdict;

  const SupEvaluator<T> joint_sup(distinct_generators(joint.credal()));

  auto test = [&](const ValueTable<T>& phi, const ValueTable<T>& psi) {
    ++verdict.pairs_tried;
    std::vector<T> values;
    values.reserve(joint.support().size());
    for (std::size_t i = 0; i < gx.size(); ++i)
      for (std::size_t j = 0; j < gy.size(); ++j) values.push_back(phi[i] * psi[j]);
    const ValueTable<T> prod(joint.support(), std::move(values));
    T jv = joint_sup(prod);
    T nv = nested_expect(mx, my, prod, which);
    if (!differ(jv, nv, tolerance)) return false;
    verdict.falsified = true;
    verdict.phi = phi;
    verdict.psi = psi;
    verdict.joint_value = std::move(jv);
    verdict.nested_value = std::move(nv);
    return true;
  };

  std::vector<ValueTable<T>> xs;
  std::vector<ValueTable<T>> ys;
  for (std::size_t i = 0; i < gx.size(); ++i) {
    const std::size_t idx[] = {i};
    xs.push_back(ValueTable<T>::indicator(gx, idx));
    xs.push_back(-xs.back());
  }
  for (std::size_t j = 0; j < gy.size(); ++j) {
    const std::size_t idx[] = {j};
    ys.push_back(ValueTable<T>::indicator(gy, idx));
    ys.push_back(-ys.back());
  }
  for (const auto& phi : xs)
    for (const auto& psi : ys)
      if (test(phi, psi)) return verdict;

  const std::vector<ValueTable<T>> shaped_x = {
      ValueTable<T>::from_function(gx, [](const Point<T>& x) { return x[0]; }),
      ValueTable<T>::from_function(gx, [](const Point<T>& x) { return positive_part(x[0]); }),
      ValueTable<T>::from_function(gx, [](const Point<T>& x) { return negative_part(x[0]); }),
  };
  const std::vector<ValueTable<T>> shaped_y = {
      ValueTable<T>::from_function(gy, [](const Point<T>& y) { return y[0]; }),
      ValueTable<T>::from_function(gy, [](const Point<T>& y) { return T(y[0] * y[0]); }),
      ValueTable<T>::from_function(gy, [](const Point<T>& y) { return abs_value(y[0]); }),
  };
  for (const auto& phi : shaped_x)
    for (const auto& psi : shaped_y)
      if (test(phi, psi) || test(phi, -psi)) return verdict;

  Xorshift64Star rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    ValueTable<T> phi = random_table(gx, rng);
    ValueTable<T> psi = random_table(gy, rng);
    if (test(phi, psi)) return verdict;
  }
  return verdict;
}

template <Scalar T>
HullComparison<T> compare_orders(const Distribution<T>& dx, const Distribution<T>& dy) {
  const JointDistribution<T> yx = peng_product(dx, dy, ProductOrder::YFromX);
  const JointDistribution<T> xy = peng_product(dx, dy, ProductOrder::XFromY);
  return compare_hulls(PointSet<T>::from_credal(yx.credal()), PointSet<T>::from_credal(xy.credal()));
}

#define SUBLINEAR_INSTANTIATE(T)                                                                              \
  template FiniteSupport<T> product_support<T>(const FiniteSupport<T>&, const FiniteSupport<T>&);           \
  template class JointDistribution<T>;                                                                       \
  template ValueTable<T> product_table<T>(const FiniteSupport<T>&, const FiniteSupport<T>&,                  \
                                          const std::function<T(const Point<T>&, const Point<T>&)>&);        \
  template T nested_expect<T>(const Distribution<T>&, const Distribution<T>&, const ValueTable<T>&,          \
                              ProductOrder);                                                                 \
  template JointDistribution<T> peng_product<T>(const Distribution<T>&, const Distribution<T>&, ProductOrder); \
  template IndependenceVerdict<T> is_independent<T>(const JointDistribution<T>&, ProductOrder, CheckMode,    \
                                                    const ProbeOptions&);                                    \
  template WeakVerdict<T> is_weakly_independent<T>(const JointDistribution<T>&, ProductOrder, std::size_t,   \
                                                   std::uint64_t, double);                                   \
  template HullComparison<T> compare_orders<T>(const Distribution<T>&, const Distribution<T>&);

SUBLINEAR_INSTANTIATE(Rational)
SUBLINEAR_INSTANTIATE(double)

#undef SUBLINEAR_INSTANTIATE

}  // namespace sublinear
