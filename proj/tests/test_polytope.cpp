#include "sublinear/errors.hpp"
#include "sublinear/polytope.hpp"

#include "doctest.h"
#include "support.hpp"

#include <algorithm>

using namespace sublinear;
using testing::frac;
using testing::q;

namespace {

template <class T>
Point<T> pt(long a, long b) {
  return {T(a), T(b)};
}

template <class T>
PointSet<T> square_with_interior() {
  return PointSet<T>({pt<T>(0, 0), pt<T>(2, 0), {frac<T>(1, 1), frac<T>(1, 2)}, pt<T>(0, 2), pt<T>(2, 2), pt<T>(1, 1)});
}

template <class T>
T dot(const std::vector<T>& y, const Point<T>& v) {
  T s(0);
  for (std::size_t i = 0; i < v.size(); ++i) s += y[i] * v[i];
  return s;
}

// random point of the simplex with denominators 2^k, in 4 coordinates
Point<Rational> random_simplex_point(Xorshift64Star& rng) {
  std::vector<long> c(4, 0);
  for (int u = 0; u < 8; ++u) c[rng.below(4)] += 1;
  Point<Rational> p;
  for (long x : c) p.push_back(q(x, 8));
  return p;
}

}  // namespace

TEST_CASE_TEMPLATE("membership in a square", T, Rational, double) {
  auto v = square_with_interior<T>();
  CHECK(is_member(pt<T>(1, 1), v));
  CHECK(is_member({frac<T>(1, 3), frac<T>(5, 3)}, v));
  CHECK(is_member(pt<T>(2, 2), v));
  auto out = membership(pt<T>(3, 1), v);
  CHECK_FALSE(out.member);
  REQUIRE(out.separator.has_value());
  for (const auto& p : v.points()) CHECK(dot(*out.separator, p) <= out.bound);
  CHECK(out.bound < out.value_at_point);
  CHECK(ScalarTraits<T>::equal(dot(*out.separator, pt<T>(3, 1)), out.value_at_point));
}

TEST_CASE("member combinations reproduce the point") {
  auto v = square_with_interior<Rational>();
  Point<Rational> z{q(3, 2), q(1, 4)};
  auto m = membership(z, v);
  REQUIRE(m.member);
  REQUIRE(m.combination.size() == v.size());
  Point<Rational> back{0, 0};
  Rational total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(m.combination[i] >= 0);
    total += m.combination[i];
    for (std::size_t k = 0; k < 2; ++k) back[k] += m.combination[i] * v[i][k];
  }
  CHECK(total == 1);
  CHECK(back == z);
}

TEST_CASE("membership against sampled convex combinations") {
  Xorshift64Star rng(11);
  for (int t = 0; t < 50; ++t) {
    std::vector<Point<Rational>> pts;
    for (int k = 0; k < 5; ++k) pts.push_back(random_simplex_point(rng));
    PointSet<Rational> v(pts);
    // inside by construction
    Point<Rational> z(4, 0);
    std::vector<Rational> lam{q(1, 2), q(1, 4), q(1, 8), q(1, 16), q(1, 16)};
    for (int k = 0; k < 5; ++k)
      for (int i = 0; i < 4; ++i) z[i] += lam[k] * pts[k][i];
    CHECK(is_member(z, v));
    // a coordinate above the largest seen cannot be reached
    Rational top = 0;
    for (const auto& p : pts) top = std::max(top, p[0]);
    if (top < 1) {
      Point<Rational> far(4, 0);
      far[0] = 1;
      auto m = membership(far, v);
      CHECK_FALSE(m.member);
      REQUIRE(m.separator.has_value());
      for (const auto& p : pts) CHECK(dot(*m.separator, p) <= m.bound);
      CHECK(dot(*m.separator, far) > m.bound);
    }
  }
}

TEST_CASE_TEMPLATE("vertices of a square with interior and repeated points", T, Rational, double) {
  auto v = square_with_interior<T>();
  auto ext = vertices(v);
  CHECK(ext.size() == 4);
  for (const auto& c : {pt<T>(0, 0), pt<T>(2, 0), pt<T>(0, 2), pt<T>(2, 2)})
    CHECK(std::find(ext.points().begin(), ext.points().end(), c) != ext.points().end());
  CHECK(vertices(ext).points() == ext.points());
  PointSet<T> dup({pt<T>(1, 1), pt<T>(1, 1), pt<T>(1, 1)});
  CHECK(vertices(dup).size() == 1);
}

TEST_CASE("unique_points sorts and removes repeats") {
  PointSet<Rational> v({pt<Rational>(2, 0), pt<Rational>(0, 1), pt<Rational>(2, 0)});
  auto u = unique_points(v);
  REQUIRE(u.size() == 2);
  CHECK(u[0] == pt<Rational>(0, 1));
  CHECK(u[1] == pt<Rational>(2, 0));
  PointSet<double> f({{0.5, 0.5}, {0.5, 0.5 + 1e-14}});
  CHECK(unique_points(f).size() == 1);
}

TEST_CASE_TEMPLATE("hull comparison", T, Rational, double) {
  auto a = square_with_interior<T>();
  PointSet<T> b({pt<T>(2, 2), pt<T>(0, 0), pt<T>(0, 2), pt<T>(2, 0)});
  CHECK(hulls_equal(a, b));
  PointSet<T> c({pt<T>(0, 0), pt<T>(2, 0), pt<T>(0, 2)});
  auto cmp = compare_hulls(a, c);
  CHECK_FALSE(cmp.equal);
  REQUIRE(cmp.witness.has_value());
  CHECK(cmp.value_a == support_value(a, *cmp.witness));
  CHECK(cmp.value_b == support_value(c, *cmp.witness));
  CHECK(cmp.value_a != cmp.value_b);
  CHECK(cmp.mode == mode_of<T>());
}

TEST_CASE("rational and float hull verdicts agree on random simplex polytopes") {
  Xorshift64Star rng(29);
  for (int t = 0; t < 60; ++t) {
    std::vector<Point<Rational>> pa, pb;
    for (int k = 0; k < 4; ++k) pa.push_back(random_simplex_point(rng));
    pb = pa;
    if (t % 2) pb.push_back(random_simplex_point(rng));
    else pb.push_back(pa[0]);
    auto to_double = [](const std::vector<Point<Rational>>& ps) {
      std::vector<Point<double>> out;
      for (const auto& p : ps) {
        Point<double> d;
        for (const auto& x : p) d.push_back(x.convert_to<double>());
        out.push_back(d);
      }
      return PointSet<double>(out);
    };
    bool exact = hulls_equal(PointSet<Rational>(pa), PointSet<Rational>(pb));
    CHECK(exact == hulls_equal(to_double(pa), to_double(pb)));
    if (t % 2 == 0) CHECK(exact);
  }
}

TEST_CASE("degenerate float instances resolve without throwing") {
  // many nearly coincident points on one face of the simplex
  std::vector<Point<double>> pts;
  for (int k = 0; k <= 20; ++k) {
    double a = k / 20.0;
    pts.push_back({a, 1 - a, 0.0});
    pts.push_back({a, 1 - a - 1e-15, 1e-15});
  }
  PointSet<double> v(pts);
  CHECK_NOTHROW(vertices(v));
  CHECK(is_member({0.3, 0.7, 0.0}, v));
  CHECK_FALSE(is_member({0.3, 0.3, 0.4}, v));
}

TEST_CASE("point sets validate their input") {
  CHECK_THROWS_AS(PointSet<Rational>(std::vector<Point<Rational>>{}), InvalidInput);
  CHECK_THROWS_AS(PointSet<Rational>({pt<Rational>(0, 0), {q(1)}}), DimensionMismatch);
  CHECK_THROWS_AS(membership({q(1)}, square_with_interior<Rational>()), DimensionMismatch);
}
