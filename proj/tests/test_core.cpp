#include <doctest.h>

#include <stdexcept>

#include <random>

#include "affcrystal/core.hpp"

using namespace affcrystal;

namespace {

FiniteWeight random_weight(std::mt19937& rng, int n, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> v(n);
  for (auto& x : v) x = d(rng);
  return FiniteWeight(v);
}

FiniteWeight random_root_lattice(std::mt19937& rng, int n) {
  auto w = random_weight(rng, n, -3, 3);
  w[n - 1] -= static_cast<int>(w.sum());
  return w;
}

LevelWeight random_level_weight(std::mt19937& rng, int n) {
  LevelWeight L;
  L.level = std::uniform_int_distribution<int>(0, 3)(rng);
  L.finite = random_weight(rng, n);
  L.delta_coeff = std::uniform_int_distribution<int>(-5, 5)(rng);
  return L;
}

// Direct evaluation of t_beta(L) = L + l beta - ((L|beta) + |beta|^2 l / 2) delta.
LevelWeight translate_by_formula(const FiniteWeight& beta, const LevelWeight& L) {
  LevelWeight out = L;
  out.finite = L.finite + L.level * beta;
  out.delta_coeff = L.delta_coeff - (dot(L.finite, beta) + dot(beta, beta) * L.level / 2);
  return out;
}

}  // namespace

TEST_CASE("dot product examples") {
  CHECK(dot(FiniteWeight({1, 0, -1}), FiniteWeight({1, 0, -1})) == 2);
  CHECK(dot(FiniteWeight::theta(3), FiniteWeight::theta(3)) == 2);
  CHECK(dot(FiniteWeight::zero(4), FiniteWeight({3, 1, -2, 7})) == 0);
  CHECK(dot(FiniteWeight::rho(3), FiniteWeight({1, 0, -1})) == 2);
  CHECK_THROWS_AS(dot(FiniteWeight({1, 2}), FiniteWeight({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("dot is symmetric and bilinear") {
  std::mt19937 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    const auto a = random_weight(rng, n), b = random_weight(rng, n), c = random_weight(rng, n);
    CHECK(dot(a, b) == dot(b, a));
    CHECK(dot(a + b, c) == dot(a, c) + dot(b, c));
    CHECK(dot(3 * a, b) == 3 * dot(a, b));
  }
}

TEST_CASE("rho, theta and simple roots") {
  CHECK(FiniteWeight::rho(4) == FiniteWeight({3, 2, 1, 0}));
  CHECK(FiniteWeight::theta(3) == FiniteWeight({1, 0, -1}));
  CHECK(FiniteWeight::simple_root(3, 2) == FiniteWeight({0, 1, -1}));
  CHECK(FiniteWeight({3, 1, 2}).normalized() == FiniteWeight({1, -1, 0}));
  CHECK(FiniteWeight::parse("2,-1,0").to_string() == "2,-1,0");
}

TEST_CASE("permutation action is a left action") {
  std::mt19937 rng(2);
  const auto perms = Permutation::all(3);
  CHECK(perms.size() == 6);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      const auto mu = random_weight(rng, 3);
      CHECK((a * b).act(mu) == a.act(b.act(mu)));
      CHECK((a * b).sign() == a.sign() * b.sign());
    }
  // (tau mu)_{tau(i)} = mu_i
  const Permutation cyc({1, 2, 0});
  CHECK(cyc.act(FiniteWeight({5, 6, 7})) == FiniteWeight({7, 5, 6}));
}

TEST_CASE("level weight selectors") {
  const auto L = LevelWeight::parse_selector("2L0+L1", 3);
  CHECK(L.level == 3);
  CHECK(L.fundamental_multiplicities() == std::vector<int>{2, 1, 0});
  CHECK(L.to_selector() == "2L0+L1");
  CHECK(L.is_dominant());
  CHECK(LevelWeight::parse_selector("L0", 2).is_vacuum());
  CHECK_THROWS_AS(LevelWeight::parse_selector("L3", 3), std::invalid_argument);
  CHECK_THROWS_AS(LevelWeight::parse_selector("1,0", 2), std::invalid_argument);
  CHECK_THROWS_AS(LevelWeight::parse_selector("L0+", 2), std::invalid_argument);
}

TEST_CASE("translate_action examples") {
  std::mt19937 rng(3);
  const auto L = random_level_weight(rng, 3);
  CHECK(translate_action(AffineWeylElement::identity(3), L) == L);

  const AffineWeylElement swap(FiniteWeight::zero(3), Permutation::transposition(3, 0, 2));
  const auto moved = translate_action(swap, L);
  CHECK(moved.delta_coeff == L.delta_coeff);
  CHECK(moved.finite == Permutation::transposition(3, 0, 2).act(L.finite));

  LevelWeight vac;
  vac.level = 1;
  vac.finite = FiniteWeight::zero(2);
  const auto t = translate_action(AffineWeylElement(FiniteWeight({1, -1}), Permutation::identity(2)), vac);
  CHECK(t.finite == FiniteWeight({1, -1}));
  CHECK(t.delta_coeff == -1);
  CHECK_THROWS_AS(AffineWeylElement(FiniteWeight({1, 0}), Permutation::identity(2)), std::invalid_argument);
}

TEST_CASE("translation agrees with the closed formula") {
  std::mt19937 rng(4);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 3;
    const auto beta = random_root_lattice(rng, n);
    const auto L = random_level_weight(rng, n);
    CHECK(AffineWeylElement(beta, Permutation::identity(n)).act(L) == translate_by_formula(beta, L));
  }
}

TEST_CASE("compose_reflection examples") {
  const auto r1 = AffineWeylElement::identity(2).compose_reflection(1);
  CHECK(r1.beta() == FiniteWeight({0, 0}));
  CHECK(r1.tau() == Permutation::transposition(2, 0, 1));
  CHECK(r1.sign() == -1);

  const auto r0 = AffineWeylElement::identity(2).compose_reflection(0);
  CHECK(r0.beta() == FiniteWeight({1, -1}));
  CHECK(r0.tau() == Permutation::transposition(2, 0, 1));
  CHECK(r0.sign() == -1);

  std::mt19937 rng(5);
  for (int i = 0; i < 3; ++i) {
    const AffineWeylElement w(random_root_lattice(rng, 3), Permutation::all(3)[i + 2]);
    CHECK(w.compose_reflection(i).compose_reflection(i) == w);
  }
}

TEST_CASE("w r_i acts as w after r_i on random level weights") {
  std::mt19937 rng(6);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 3;
    const auto perms = Permutation::all(n);
    const AffineWeylElement w(random_root_lattice(rng, n), perms[rng() % perms.size()]);
    const auto L = random_level_weight(rng, n);
    for (int i = 0; i < n; ++i) {
      const auto wr = w.compose_reflection(i);
      CHECK(wr.act(L) == w.act(L.reflect(i)));
      CHECK(wr.sign() == -w.sign());
    }
  }
}

TEST_CASE("r_0 is t_theta r_theta on level weights") {
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    const auto L = random_level_weight(rng, n);
    const AffineWeylElement r0(FiniteWeight::theta(n), Permutation::transposition(n, 0, n - 1));
    CHECK(r0.act(L) == L.reflect(0));
    CHECK(L.reflect(0).reflect(0) == L);
  }
}
