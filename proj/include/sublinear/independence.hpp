#pragma once

#include "sublinear/measure.hpp"
#include "sublinear/polytope.hpp"
#include "sublinear/scalar.hpp"
#include "sublinear/space.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace sublinear {

/// Which variable is independent from which.
///   YFromX: E[phi(X,Y)] = E[ E[phi(x,Y)]_{x=X} ]  (inner over Y, outer over X)
///   XFromY: E[phi(X,Y)] = E[ E[phi(X,y)]_{y=Y} ]  (inner over X, outer over Y)
enum class ProductOrder { YFromX, XFromY };

std::string_view to_string(ProductOrder order);
ProductOrder parse_order(std::string_view text);
ProductOrder opposite(ProductOrder order);

/// Materialization limits for peng_product. The grid of the outer variable
/// may hold at most `max_outer_grid` points and each outer vertex may expand
/// into at most `max_selections` inner selections.
inline constexpr std::size_t kMaxOuterGrid = 6;
inline constexpr std::size_t kMaxSelections = 4096;  // 4 inner vertices on 6 points

/// Product grid gridX x gridY in row-major order: index i * |gridY| + j holds
/// the concatenated point (x_i, y_j).
template <Scalar T>
FiniteSupport<T> product_support(const FiniteSupport<T>& grid_x, const FiniteSupport<T>& grid_y);

/// Law of the pair (X, Y) on the row-major product grid.
template <Scalar T>
class JointDistribution {
 public:
  JointDistribution(FiniteSupport<T> grid_x, FiniteSupport<T> grid_y, CredalSet<T> credal);

  const FiniteSupport<T>& grid_x() const { return grid_x_; }
  const FiniteSupport<T>& grid_y() const { return grid_y_; }
  const CredalSet<T>& credal() const { return credal_; }
  const FiniteSupport<T>& support() const { return credal_.support(); }

  Distribution<T> marginal_x() const;
  Distribution<T> marginal_y() const;

 private:
  FiniteSupport<T> grid_x_;
  FiniteSupport<T> grid_y_;
  CredalSet<T> credal_;
};

/// Builds a table on the product grid from phi(x, y).
template <Scalar T>
ValueTable<T> product_table(const FiniteSupport<T>& grid_x, const FiniteSupport<T>& grid_y,
                            const std::function<T(const Point<T>&, const Point<T>&)>& phi);

/// Nested evaluation of phi in the given order.
template <Scalar T>
T nested_expect(const Distribution<T>& dx, const Distribution<T>& dy, const ValueTable<T>& phi, ProductOrder order);

/// Materialized Peng product. For YFromX the generators are P (x) (Q_x)_x with
/// P over the vertices of dX and an independent choice of Q_x among the
/// vertices of dY for every grid point x in the support of P; the weight at
/// (x, y) is P(x) Q_x(y). Throws SizeGuardExceeded beyond the limits above.
template <Scalar T>
JointDistribution<T> peng_product(const Distribution<T>& dx, const Distribution<T>& dy, ProductOrder order);

/// Un-materialized Peng product: evaluates through nested_expect.
template <Scalar T>
class LazyPengProduct {
 public:
  LazyPengProduct(Distribution<T> dx, Distribution<T> dy, ProductOrder order)
      : dx_(std::move(dx)), dy_(std::move(dy)), order_(order) {}

  T sup_expect(const ValueTable<T>& phi) const { return nested_expect(dx_, dy_, phi, order_); }
  ProductOrder order() const { return order_; }

 private:
  Distribution<T> dx_;
  Distribution<T> dy_;
  ProductOrder order_;
};

enum class CheckMode { Certificate, Probe };

template <Scalar T>
struct IndependenceVerdict {
  bool independent = true;
  CheckMode check = CheckMode::Certificate;
  Mode mode = mode_of<T>();
  std::optional<ValueTable<T>> witness;
  T joint_value{};    // E_joint[witness]
  T product_value{};  // nested value of the witness in the checked order
  std::size_t tables_tried = 0;
};

struct ProbeOptions {
  std::size_t random_tables = 200;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;  // float mode only
};

/// Is the joint law the Peng product of its own marginals in order `which`?
/// Certificate mode compares hulls and returns a separating table on
/// failure; probe mode searches random and structured tables and can only
/// falsify.
template <Scalar T>
IndependenceVerdict<T> is_independent(const JointDistribution<T>& joint, ProductOrder which,
                                      CheckMode check = CheckMode::Certificate, const ProbeOptions& probe = {});

template <Scalar T>
struct WeakVerdict {
  bool falsified = false;
  Mode mode = mode_of<T>();
  std::optional<ValueTable<T>> phi;  // on gridX
  std::optional<ValueTable<T>> psi;  // on gridY
  T joint_value{};
  T nested_value{};
  std::size_t pairs_tried = 0;
};

/// Falsifier for independence restricted to product tables phi(x) psi(y):
/// random table pairs plus every pair of signed indicators.
template <Scalar T>
WeakVerdict<T> is_weakly_independent(const JointDistribution<T>& joint, ProductOrder which, std::size_t trials,
                                     std::uint64_t seed, double tolerance = 1e-9);

/// Both-order comparison: are the two Peng products of (dX, dY) the same law?
template <Scalar T>
HullComparison<T> compare_orders(const Distribution<T>& dx, const Distribution<T>& dy);

}  // namespace sublinear
