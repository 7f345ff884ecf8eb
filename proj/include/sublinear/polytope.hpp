#pragma once

#include "sublinear/measure.hpp"
#include "sublinear/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sublinear {

/// Nonempty list of vectors of a common dimension. In measure use the points
/// are generator weight vectors.
template <Scalar T>
class PointSet {
 public:
  explicit PointSet(std::vector<Point<T>> points);

  static PointSet from_credal(const CredalSet<T>& m) { return PointSet(m.weight_vectors()); }

  std::size_t dimension() const { return points_.front().size(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<Point<T>>& points() const { return points_; }
  const Point<T>& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<Point<T>> points_;
};

/// Outcome of the feasibility program
///   find lambda >= 0, sum lambda = 1, sum lambda_i v_i = z.
/// When infeasible, `separator` holds a direction y with
///   y.v_i <= bound < y.z   for every point v_i,
/// i.e. a table whose sup over conv(V) is strictly below its value at z.
template <Scalar T>
struct Membership {
  bool member = false;
  std::vector<T> combination;          // lambda over the queried points, when member
  std::optional<std::vector<T>> separator;
  T bound{};                           // max_i y.v_i, when separator is set
  T value_at_point{};                  // y.z, when separator is set
};

template <Scalar T>
Membership<T> membership(const Point<T>& z, const PointSet<T>& v);

template <Scalar T>
bool is_member(const Point<T>& z, const PointSet<T>& v);

/// Duplicate-free copy (exact equality in rational mode, coordinate-wise
/// 1e-12 in float mode), sorted lexicographically.
template <Scalar T>
PointSet<T> unique_points(const PointSet<T>& v);

/// Extreme points of conv(V).
template <Scalar T>
PointSet<T> vertices(const PointSet<T>& v);

/// Verdict of a hull comparison. On inequality, `witness` is a direction whose
/// support values over the two hulls differ: value_a = max_A y.a and
/// value_b = max_B y.b.
template <Scalar T>
struct HullComparison {
  bool equal = true;
  Mode mode = mode_of<T>();
  std::optional<std::vector<T>> witness;
  T value_a{};
  T value_b{};
};

/// conv(A) == conv(B), decided by mutual membership. Points that occur
/// literally in the other set skip the feasibility program.
template <Scalar T>
HullComparison<T> compare_hulls(const PointSet<T>& a, const PointSet<T>& b);

template <Scalar T>
bool hulls_equal(const PointSet<T>& a, const PointSet<T>& b);

/// max_i y.v_i
template <Scalar T>
T support_value(const PointSet<T>& v, const std::vector<T>& direction);

}  // namespace sublinear
