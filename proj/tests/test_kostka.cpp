#include <doctest.h>

#include <stdexcept>

#include "affcrystal/kostka.hpp"
#include "affcrystal/straighten.hpp"
#include "oracles.hpp"

using namespace affcrystal;

namespace {

FiniteWeight W(std::vector<int> v) { return FiniteWeight(std::move(v)); }

CrystalSpec spec_of(int n, std::vector<RectShape> shapes) {
  CrystalSpec s;
  s.n = n;
  s.shapes = std::move(shapes);
  return s;
}

LevelWeight level_weight(int level, const FiniteWeight& lambda) {
  LevelWeight w;
  w.level = level;
  w.finite = lambda.normalized();
  return w;
}

LaurentPoly poly(std::initializer_list<std::pair<int, LaurentPoly::Coeff>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

const std::vector<std::vector<RectShape>> kSmallProducts{
    {{1, 1}, {1, 1}, {1, 1}},
    {{1, 2}, {1, 1}},
    {{1, 2}, {1, 2}},
    {{1, 1}, {1, 2}, {1, 1}},
};

const std::vector<std::vector<RectShape>> kRankThreeProducts{
    {{1, 1}, {1, 1}, {1, 1}},
    {{2, 1}, {1, 1}},
    {{1, 2}, {2, 1}},
    {{2, 1}, {2, 1}, {1, 1}},
    {{2, 2}, {1, 1}},
};

}  // namespace

TEST_CASE("classical Kostka examples, n = 2") {
  RMatrixRegistry reg;
  const auto two = spec_of(2, {{1, 1}, {1, 1}});
  CHECK(kostka_classical(two, W({2, 0}), reg).poly == LaurentPoly::constant(1));
  CHECK(kostka_classical(two, W({1, 1}), reg).poly == LaurentPoly::monomial(-1));
  const auto three = spec_of(2, {{1, 1}, {1, 1}, {1, 1}});
  CHECK(kostka_classical(three, W({2, 1}), reg).poly == poly({{-2, 1}, {-1, 1}}));
  CHECK(kostka_classical(three, W({3, 0}), reg).poly == LaurentPoly::constant(1));
  CHECK(kostka_classical(three, W({2, 1}), reg).path_count == 2);
}

TEST_CASE("non-dominant or wrong-size lambda gives zero") {
  RMatrixRegistry reg;
  const auto s = spec_of(2, {{1, 1}, {1, 1}});
  CHECK(kostka_classical(s, W({0, 2}), reg).poly.is_zero());
  CHECK(kostka_classical(s, W({3, 0}), reg).poly.is_zero());
  CHECK_THROWS_AS(kostka_classical(s, W({2, 0, 0}), reg), SpecError);
}

TEST_CASE("dominant weights") {
  const auto ws = dominant_weights(3, 3);
  REQUIRE(ws.size() == 3);
  CHECK(ws[0] == W({3, 0, 0}));
  CHECK(ws[1] == W({2, 1, 0}));
  CHECK(ws[2] == W({1, 1, 1}));
  CHECK(dominant_weights(2, 0) == std::vector<FiniteWeight>{W({0, 0})});
}

TEST_CASE("multiplicity table examples") {
  const auto t = multiplicity_table(2, {{1, 1}, {1, 1}, {1, 1}});
  CHECK(t.at(W({3, 0})) == 1);
  CHECK(t.at(W({2, 1})) == 2);
  const auto u = multiplicity_table(3, {{1, 1}, {1, 1}});
  CHECK(u.at(W({2, 0, 0})) == 1);
  CHECK(u.at(W({1, 1, 0})) == 1);
  const auto v = multiplicity_table(3, {{1, 2}, {2, 1}});
  CHECK(v.at(W({3, 1, 0})) == 1);
  CHECK(v.at(W({2, 1, 1})) == 1);
  CHECK(v.count(W({2, 2, 0})) == 0);
}

TEST_CASE("multiplicity table respects Weyl dimensions") {
  for (const auto& shapes : kRankThreeProducts) {
    long long expected = 1;
    for (const auto& s : shapes) {
      std::vector<int> rect(3, 0);
      for (int r = 0; r < s.rows; ++r) rect[r] = s.cols;
      expected *= oracle::weyl_dimension(rect);
    }
    long long total = 0;
    for (const auto& [lambda, m] : multiplicity_table(3, shapes))
      total += static_cast<long long>(m) * oracle::weyl_dimension(lambda.coords());
    CHECK(total == expected);
  }
}

TEST_CASE("Kostka at q = 1 equals the tensor product multiplicity") {
  RMatrixRegistry reg;
  auto run = [&](int n, const std::vector<RectShape>& shapes) {
    const auto s = spec_of(n, shapes);
    for (const auto& lambda : dominant_weights(n, s.total_size())) {
      const auto k = kostka_classical(s, lambda, reg);
      CHECK(BigInt(k.poly.at_one()) == multiplicity_oracle(s, lambda));
      CHECK(static_cast<LaurentPoly::Coeff>(k.path_count) == k.poly.at_one());
    }
  };
  for (const auto& shapes : kSmallProducts) run(2, shapes);
  for (const auto& shapes : kRankThreeProducts) run(3, shapes);
  run(4, {{2, 1}, {1, 1}, {3, 1}});
}

TEST_CASE("classical Kostka is independent of the factor order") {
  RMatrixRegistry reg;
  const auto a = spec_of(3, {{1, 2}, {2, 1}, {1, 1}});
  const auto b = spec_of(3, {{1, 1}, {2, 1}, {1, 2}});
  for (const auto& lambda : dominant_weights(3, a.total_size()))
    CHECK(kostka_classical(a, lambda, reg).poly == kostka_classical(b, lambda, reg).poly);
}

TEST_CASE("level-restricted examples") {
  RMatrixRegistry reg;
  auto s = spec_of(2, {{1, 1}, {1, 1}});
  s.level = 1;
  const auto k = kostka_level(s, reg);
  CHECK(k.poly == LaurentPoly::monomial(-1));
  CHECK(k.path_count == 1);
  const auto paths = level_restricted_paths(s);
  REQUIRE(paths.size() == 1);
  CHECK(paths.front() == Path::parse("2|1"));

  s.LambdaPrime = LevelWeight::parse_selector("L1", 2);
  CHECK(kostka_level(s, reg).poly.is_zero());
}

TEST_CASE("large level recovers the classical Kostka polynomial") {
  RMatrixRegistry reg;
  auto check = [&](int n, const std::vector<RectShape>& shapes) {
    auto s = spec_of(n, shapes);
    s.level = s.total_size();
    for (const auto& lambda : dominant_weights(n, s.total_size())) {
      s.LambdaPrime = level_weight(*s.level, lambda);
      CHECK(kostka_level(s, reg).poly == kostka_classical(s, lambda, reg).poly);
    }
  };
  for (const auto& shapes : kSmallProducts) check(2, shapes);
  check(3, {{2, 1}, {1, 1}, {1, 1}});
}

TEST_CASE("level-restricted sums grow with the level") {
  RMatrixRegistry reg;
  auto s = spec_of(2, {{1, 1}, {1, 2}, {1, 1}});
  for (const auto& lambda : dominant_weights(2, s.total_size())) {
    LaurentPoly prev;
    for (int level = 2; level <= 5; ++level) {
      s.level = level;
      if (lambda[0] - lambda[1] > level) continue;
      s.LambdaPrime = level_weight(level, lambda);
      const auto cur = kostka_level(s, reg).poly;
      const auto diff = cur - prev;
      for (const auto& [e, c] : diff.terms()) CHECK(c > 0);
      prev = cur;
    }
  }
}

TEST_CASE("level-restricted paths with a nonvacuum Lambda") {
  RMatrixRegistry reg;
  auto s = spec_of(3, {{1, 1}, {2, 1}});
  s.level = 2;
  s.Lambda = LevelWeight::parse_selector("L0+L1", 3);
  std::uint64_t total = 0;
  for (const auto& Lp : level_dominant_weights(3, 2)) {
    s.LambdaPrime = Lp;
    const auto k = kostka_level(s, reg);
    CHECK(static_cast<LaurentPoly::Coeff>(k.path_count) == k.poly.at_one());
    CHECK(k.path_count == level_restricted_paths(s).size());
    total += k.path_count;
  }
  CHECK(total > 0);
}

TEST_CASE("ground hypothesis at the vacuum") {
  RMatrixRegistry reg;
  auto s = spec_of(2, {{1, 1}, {1, 1}});
  s.level = 1;
  CHECK(check_ground_hypothesis(s, reg).holds);
}

TEST_CASE("validation rejects bad input") {
  RMatrixRegistry reg;
  auto s = spec_of(2, {{2, 1}});
  CHECK_THROWS_AS(s.validate(), SpecError);
  s = spec_of(1, {});
  CHECK_THROWS_AS(s.validate(), SpecError);
  s = spec_of(2, {{1, 3}});
  s.level = 2;
  CHECK_THROWS_AS(s.validate(), SpecError);
  CHECK_NOTHROW(s.validate(false));
  s = spec_of(2, {{1, 1}});
  s.level = 1;
  s.Lambda = LevelWeight::parse_selector("2L0", 2);
  CHECK_THROWS_AS(s.validate(), SpecError);
  s.Lambda.reset();
  s.b0 = RectShape{1, 2};
  CHECK_THROWS_AS(s.validate(), SpecError);
  s.b0.reset();
  s.level = -1;
  CHECK_THROWS_AS(s.validate(), SpecError);
}
