#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>

#include "affcrystal/tensorpath.hpp"
#include "oracles.hpp"

using namespace affcrystal;

namespace {

Path P(std::string_view s) { return Path::parse(s); }

const std::vector<RectShape> ones(std::size_t L) { return std::vector<RectShape>(L, RectShape{1, 1}); }

LevelWeight vacuum(int n, int level) { return LevelWeight::parse_selector(std::to_string(level) + "L0", n); }

Path random_path(const TensorCrystal& B, std::mt19937& rng) {
  return B.element_at(std::uniform_int_distribution<std::uint64_t>(0, B.cardinality() - 1)(rng));
}

}  // namespace

TEST_CASE("path text round trip") {
  CHECK(P("2|1").to_string() == "2|1");
  CHECK(P("1,2|1/3").factors.size() == 2);
  CHECK(P("").length() == 0);
}

TEST_CASE("tensor strings examples") {
  const TensorCrystal B(2, ones(2));
  CHECK(B.phi(P("1|1"), 1) == 2);
  CHECK(B.epsilon(P("1|1"), 1) == 0);
  // phi_1(b1) = 1 > eps_1(b2) = 0, so f_1 acts on b1, the right factor
  CHECK(B.f(P("1|1"), 1) == P("1|2"));
  CHECK(B.f_position(P("1|1"), 1) == std::optional<std::size_t>(1));
  // u_0 contributes nothing
  const FormalHighestVector u{LevelWeight::parse_selector("0", 2)};
  for (int i = 0; i < 2; ++i) {
    CHECK(B.strings_with(P("2|1"), u, i).phi == B.phi(P("2|1"), i));
    CHECK(B.strings_with(P("2|1"), u, i).eps == B.epsilon(P("2|1"), i));
  }
}

TEST_CASE("string axioms on random tensor elements") {
  std::mt19937 rng(21);
  const std::vector<std::pair<int, std::vector<RectShape>>> cases{
      {2, ones(3)}, {3, {{1, 2}, {2, 1}, {1, 1}}}, {4, {{2, 1}, {1, 2}, {3, 1}}}};
  for (int t = 0; t < 500; ++t) {
    const auto& [n, shapes] = cases[t % cases.size()];
    const TensorCrystal B(n, shapes);
    const Path b = random_path(B, rng);
    const int i = static_cast<int>(rng() % n);
    const auto wt = B.weight(b);
    const int pair = i == 0 ? wt[n - 1] - wt[0] : wt[i - 1] - wt[i];
    CHECK(B.phi(b, i) - B.epsilon(b, i) == pair);
    if (auto f = B.f(b, i)) CHECK(B.e(*f, i) == b);
    if (t < 200) {
      Path c = b;
      for (int k = 0; k < B.phi(b, i); ++k) c = B.f(c, i).value();
      CHECK_FALSE(B.f(c, i).has_value());
    }
  }
}

TEST_CASE("tensor statistics are associative") {
  for (int n = 2; n <= 3; ++n) {
    const TensorCrystal B(n, ones(3));
    const RectCrystal box(n, {1, 1});
    B.for_each([&](const Path& b) {
      for (int i = 0; i < n; ++i) {
        StringPair s[3];
        for (int k = 0; k < 3; ++k) s[k] = {box.phi(b.factors[k], i), box.epsilon(b.factors[k], i)};
        const auto left = tensor_strings(tensor_strings(s[0], s[1]), s[2]);
        const auto right = tensor_strings(s[0], tensor_strings(s[1], s[2]));
        CHECK(left.phi == right.phi);
        CHECK(left.eps == right.eps);
        CHECK(B.phi(b, i) == left.phi);
        CHECK(B.epsilon(b, i) == left.eps);
        // operators via the nested grouping b3 (x) (b2 (x) b1)
        const TensorCrystal inner(n, ones(2));
        const Path tail{{b.factors[1], b.factors[2]}};
        const auto st = inner.strings(tail, i);
        std::optional<Path> f;
        if (st.phi > s[0].eps) {
          if (auto g = inner.f(tail, i)) f = Path{{b.factors[0], g->factors[0], g->factors[1]}};
        } else if (auto g = box.f(b.factors[0], i)) {
          f = Path{{*g, b.factors[1], b.factors[2]}};
        }
        CHECK(B.f(b, i) == f);
      }
    });
  }
}

TEST_CASE("classically restricted examples") {
  const TensorCrystal B(2, ones(2));
  CHECK(classically_restricted(B, FiniteWeight({2, 0})).size() == 1);
  CHECK(classically_restricted(B, FiniteWeight({1, 1})).size() == 1);
  CHECK(classically_restricted(B, FiniteWeight({0, 2})).empty());
  CHECK(is_classically_restricted(B, P("1|1")));
  CHECK_FALSE(is_classically_restricted(B, P("1|2")));
  CHECK(is_classically_restricted(B, P("2|1")));
}

TEST_CASE("level restriction examples") {
  const TensorCrystal empty(2, {});
  const auto L0 = vacuum(2, 1);
  CHECK(is_level_restricted(empty, Path{}, L0));
  CHECK(weight_out(empty, Path{}, L0).same_class(L0));

  const TensorCrystal B(2, ones(2));
  int count = 0;
  B.for_each([&](const Path& b) {
    if (is_level_restricted(B, b, L0) && weight_out(B, b, L0).finite.same_class(L0.finite)) ++count;
  });
  CHECK(count == 1);

  CHECK_THROWS_AS(is_level_restricted(TensorCrystal(2, {{1, 2}}), P("1,1"), L0), std::invalid_argument);
  LevelWeight bad = L0;
  bad.finite = FiniteWeight({0, 2});
  CHECK_THROWS_AS(is_level_restricted(B, P("1|1"), bad), std::invalid_argument);
}

TEST_CASE("restricted paths weighted by dimension count the whole crystal") {
  for (int n = 2; n <= 3; ++n)
    for (std::size_t L = 1; L <= 4; ++L)
      for (const auto& shapes : oracle::words<RectShape>(n == 2 ? std::vector<RectShape>{{1, 1}, {1, 2}}
                                                                : std::vector<RectShape>{{1, 1}, {2, 1}},
                                                         static_cast<int>(L))) {
        const TensorCrystal B(n, shapes);
        long long total = 0;
        B.for_each([&](const Path& b) {
          if (is_classically_restricted(B, b)) total += oracle::weyl_dimension(B.weight(b).coords());
        });
        CHECK(total == static_cast<long long>(B.cardinality()));
      }
}

TEST_CASE("level restriction bounds every epsilon and is monotone in the level") {
  for (int n = 2; n <= 3; ++n) {
    const TensorCrystal B(n, {{1, 2}, {1, 1}, {1, 1}});
    for (int level = 2; level <= 3; ++level)
      for (const auto& Lambda : {vacuum(n, level), LevelWeight::parse_selector(std::to_string(level - 1) + "L0+L1", n)}) {
        LevelWeight bigger = Lambda;
        bigger.level += 1;
        B.for_each([&](const Path& b) {
          if (!is_level_restricted(B, b, Lambda)) return;
          for (int i = 0; i < n; ++i) CHECK(B.epsilon(b, i) <= Lambda.coroot_pairing(i));
          if (Lambda.is_vacuum()) CHECK(is_classically_restricted(B, b));
          CHECK(is_level_restricted(B, b, bigger));
        });
      }
  }
}
