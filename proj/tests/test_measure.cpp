#include "sublinear/errors.hpp"
#include "sublinear/measure.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace sublinear;
using testing::frac;
using testing::line;
using testing::q;

TEST_CASE_TEMPLATE("expectation of x^2 under (1/4, 1/2, 1/4)", T, Rational, double) {
  auto g = line<T>({-1, 0, 1});
  auto p = make_measure(g, {frac<T>(1, 4), frac<T>(1, 2), frac<T>(1, 4)});
  auto x2 = ValueTable<T>::from_function(g, [](const Point<T>& x) { return T(x[0] * x[0]); });
  CHECK(ScalarTraits<T>::equal(expect(p, x2), frac<T>(1, 2)));
}

TEST_CASE_TEMPLATE("upper expectation and capacity of the three-point law", T, Rational, double) {
  auto d = testing::three_point<T>();
  const auto& g = d.grid();
  auto x2 = ValueTable<T>::from_function(g, [](const Point<T>& x) { return T(x[0] * x[0]); });
  CHECK(ScalarTraits<T>::equal(sup_expect(d.credal(), x2), frac<T>(4, 5)));
  const std::size_t one[] = {2};
  CHECK(ScalarTraits<T>::equal(capacity(d.credal(), one), frac<T>(2, 5)));
  const std::size_t middle[] = {1};
  CHECK(ScalarTraits<T>::equal(capacity(d.credal(), middle), frac<T>(1, 2)));
}

TEST_CASE("sub-additivity on a hand case") {
  auto d = testing::three_point<Rational>();
  const std::size_t lo[] = {0};
  const std::size_t hi[] = {2};
  const std::size_t both[] = {0, 2};
  // c({-1, 1}) = 4/5 <= c({-1}) + c({1}) = 2/5 + 2/5
  CHECK(capacity(d.credal(), both) == q(4, 5));
  CHECK(capacity(d.credal(), lo) + capacity(d.credal(), hi) == q(4, 5));
}

TEST_CASE("pushforward by x^2 merges the two signs") {
  auto d = testing::three_point<Rational>();
  std::vector<Point<Rational>> images;
  for (const auto& p : d.grid().points()) images.push_back({p[0] * p[0]});
  SupportImage<Rational> img = image_support(images);
  REQUIRE(img.support.size() == 2);
  CHECK(img.support[0][0] == 1);  // first appearance order
  CHECK(img.support[1][0] == 0);
  CHECK(img.index_map == std::vector<std::size_t>{0, 1, 0});
  CredalSet<Rational> pushed = pushforward(d.credal(), img.support, img.index_map);
  CHECK(pushed.generators()[0].weights() == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(pushed.generators()[1].weights() == std::vector<Rational>{q(4, 5), q(1, 5)});
}

TEST_CASE("pushforward agrees with composition on random tables") {
  Xorshift64Star rng(3);
  auto g = line<Rational>({-2, -1, 0, 1, 2, 3});
  auto m = testing::credal<Rational>(
      g, {{q(1, 6), q(1, 6), q(1, 6), q(1, 6), q(1, 6), q(1, 6)}, {q(1, 2), 0, 0, 0, 0, q(1, 2)}, {0, q(1, 4), q(3, 4), 0, 0, 0}});
  std::vector<Point<Rational>> images;
  for (const auto& p : g.points()) images.push_back({abs(p[0])});
  auto img = image_support(images);
  auto pushed = pushforward(m, img.support, img.index_map);
  for (int t = 0; t < 100; ++t) {
    auto f = testing::random_table(img.support, rng);
    std::vector<Rational> composed;
    for (std::size_t i = 0; i < g.size(); ++i) composed.push_back(f[img.index_map[i]]);
    CHECK(sup_expect(pushed, f) == sup_expect(m, ValueTable<Rational>(g, composed)));
  }
}

TEST_CASE("sup_expect matches a brute-force maximum") {
  Xorshift64Star rng(17);
  auto d = testing::three_point<Rational>();
  for (int t = 0; t < 200; ++t) {
    auto f = testing::random_table(d.grid(), rng, -3, 3);
    CHECK(sup_expect(d.credal(), f) == testing::brute_sup(d.credal(), f));
  }
}

TEST_CASE_TEMPLATE("screened evaluator agrees with the plain maximum", T, Rational, double) {
  Xorshift64Star rng(23);
  auto g = line<T>({-3, -1, 0, 2, 4});
  std::vector<std::vector<T>> ws;
  for (int k = 0; k < 40; ++k) {
    std::vector<std::int64_t> c(5, 0);
    for (int u = 0; u < 12; ++u) c[rng.below(5)] += 1;
    std::vector<T> w;
    for (auto x : c) w.push_back(frac<T>(x, 12));
    ws.push_back(w);
  }
  auto m = testing::credal<T>(g, ws);
  SupEvaluator<T> eval(m);
  for (int t = 0; t < 200; ++t) {
    auto f = testing::random_table(g, rng, -5, 5);
    CHECK(eval(f) == sup_expect(m, f));
  }
}

TEST_CASE("measure validation") {
  auto g = line<Rational>({0, 1});
  CHECK_THROWS_AS(make_measure(g, {q(3, 2), q(-1, 2)}), NegativeWeight);
  CHECK_THROWS_AS(make_measure(g, {q(1, 2), q(1, 3)}), NotNormalized);
  CHECK_THROWS_AS(make_measure(g, {q(1)}), DimensionMismatch);
  CHECK_THROWS_AS(dirac(g, 2), IndexOutOfRange);
  CHECK_NOTHROW(ProbabilityMeasure<Rational>::unvalidated(g, {q(2), q(-1)}));
}

TEST_CASE("float normalization tolerance is 1e-12") {
  auto g = line<double>({0, 1});
  CHECK_NOTHROW(make_measure(g, {0.5, 0.5 + 1e-13}));
  CHECK_THROWS_AS(make_measure(g, {0.5, 0.5 + 1e-6}), NotNormalized);
}

TEST_CASE("support validation") {
  CHECK_THROWS_AS(FiniteSupport<Rational>(std::vector<Point<Rational>>{}), InvalidInput);
  CHECK_THROWS_AS(FiniteSupport<Rational>({{q(1)}, {q(1)}}), InvalidInput);
  CHECK_THROWS_AS(FiniteSupport<Rational>({{q(1)}, {q(1), q(2)}}), DimensionMismatch);
  CHECK_THROWS_AS(FiniteSupport<double>({{0.0}, {std::nan("")}}), InvalidInput);
  FiniteSupport<Rational> s({{q(1), q(2)}, {q(3), q(4)}});
  CHECK(s.dimension() == 2);
  CHECK(s.find({q(3), q(4)}) == 1);
  CHECK(s.find({q(5), q(4)}) == s.size());
}

TEST_CASE("credal sets and tables reject mixed supports") {
  auto a = line<Rational>({0, 1});
  auto b = line<Rational>({0, 2});
  CHECK_THROWS_AS(CredalSet<Rational>(a, {dirac(b, 0)}), SupportMismatch);
  CHECK_THROWS_AS(CredalSet<Rational>(a, {}), InvalidInput);
  CHECK_THROWS_AS(sup_expect(CredalSet<Rational>(a, {dirac(a, 0)}), ValueTable<Rational>::constant(b, 1)),
                  SupportMismatch);
  CHECK_THROWS_AS(ValueTable<Rational>::constant(a, 1) + ValueTable<Rational>::constant(b, 1), SupportMismatch);
  CHECK_THROWS_AS(ValueTable<Rational>(a, {q(1)}), DimensionMismatch);
  const std::size_t bad[] = {5};
  CHECK_THROWS_AS(ValueTable<Rational>::indicator(a, bad), IndexOutOfRange);
}

TEST_CASE("equal point lists compare equal as supports") {
  auto a = line<Rational>({0, 1});
  auto b = line<Rational>({0, 1});
  CHECK(a == b);
  CHECK_FALSE(a == line<Rational>({1, 0}));
}

TEST_CASE("value table arithmetic") {
  auto g = line<Rational>({0, 1, 2});
  ValueTable<Rational> f(g, {q(1), q(-2), q(3)});
  ValueTable<Rational> h(g, {q(2), q(2), q(-1)});
  CHECK((f + h).values() == std::vector<Rational>{3, 0, 2});
  CHECK((f - h).values() == std::vector<Rational>{-1, -4, 4});
  CHECK((f * h).values() == std::vector<Rational>{2, -4, -3});
  CHECK((f * q(1, 2)).values() == std::vector<Rational>{q(1, 2), -1, q(3, 2)});
  CHECK((-f + q(1)).values() == std::vector<Rational>{0, 3, -2});
  CHECK((f + ValueTable<Rational>::constant(g, 5)).dominates(f));
  CHECK_FALSE(f.dominates(h));
}

TEST_CASE("dirac_index identifies unit masses") {
  auto g = line<Rational>({0, 1, 2});
  CHECK(dirac(g, 1).dirac_index() == std::optional<std::size_t>(1));
  CHECK_FALSE(make_measure(g, {q(1, 2), q(1, 2), 0}).dirac_index().has_value());
}
