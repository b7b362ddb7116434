#include <doctest.h>

#include <stdexcept>

#include "affcrystal/bosonic.hpp"
#include "affcrystal/straighten.hpp"
#include "oracles.hpp"

using namespace affcrystal;

namespace {

CrystalSpec spec_of(int n, std::vector<RectShape> shapes, std::optional<int> level = std::nullopt) {
  CrystalSpec s;
  s.n = n;
  s.shapes = std::move(shapes);
  s.level = level;
  return s;
}

std::vector<RectShape> ones(int L) { return std::vector<RectShape>(static_cast<std::size_t>(L), RectShape{1, 1}); }

// Tensor products of single columns B^{k,1}, 1 <= k < n, of length L.
std::vector<std::vector<RectShape>> column_products(int n, int L) {
  std::vector<RectShape> cols;
  for (int k = 1; k < n; ++k) cols.push_back({k, 1});
  return oracle::words(cols, L);
}

}  // namespace

TEST_CASE("bosonic sum examples") {
  RMatrixRegistry reg;
  CHECK(bosonic_K(spec_of(2, ones(2), 1), reg).poly == LaurentPoly::monomial(-1));
  LaurentPoly expected;
  expected.add_term(-4, 1);
  expected.add_term(-2, 1);
  const auto s = spec_of(2, ones(4), 2);
  CHECK(bosonic_K(s, reg).poly == expected);
  CHECK(kostka_level(s, reg).poly == expected);
  CHECK(bosonic_K(spec_of(3, {{2, 1}, {1, 1}}, 2), reg).poly == LaurentPoly::monomial(-1));
}

TEST_CASE("bosonic sum equals the level-restricted Kostka polynomial") {
  RMatrixRegistry reg;
  for (int level = 1; level <= 2; ++level) {
    for (int L = 0; L <= 5; ++L) {
      const auto s = spec_of(2, ones(L), level);
      CHECK(bosonic_K(s, reg).poly == kostka_level(s, reg).poly);
    }
    for (int L = 0; L <= 3; ++L) {
      const auto s = spec_of(3, ones(L), level);
      CHECK(bosonic_K(s, reg).poly == kostka_level(s, reg).poly);
    }
  }
  for (const auto& shapes : std::vector<std::vector<RectShape>>{{{1, 2}, {1, 1}}, {{1, 1}, {1, 2}, {1, 1}}}) {
    const auto s = spec_of(2, shapes, 2);
    CHECK(bosonic_K(s, reg).poly == kostka_level(s, reg).poly);
  }
}

TEST_CASE("bosonic sum with general Lambda and Lambda'") {
  RMatrixRegistry reg;
  for (int n = 2; n <= 3; ++n)
    for (int level = 1; level <= 2; ++level)
      for (const auto& L : level_dominant_weights(n, level))
        for (const auto& Lp : level_dominant_weights(n, level)) {
          auto s = spec_of(n, ones(3), level);
          s.Lambda = L;
          s.LambdaPrime = Lp;
          if (!check_ground_hypothesis(s, reg).holds) continue;
          CAPTURE(L.to_selector());
          CAPTURE(Lp.to_selector());
          CHECK(bosonic_K(s, reg).poly == kostka_level(s, reg).poly);
        }
}

TEST_CASE("vacuum form agrees with the general sum") {
  RMatrixRegistry reg;
  for (int level = 1; level <= 2; ++level)
    for (int L = 0; L <= 4; ++L) {
      const auto s = spec_of(2, ones(L), level);
      CHECK(bosonic_K_vacuum(s, reg).poly == bosonic_K(s, reg).poly);
    }
  auto s = spec_of(2, ones(2), 1);
  s.Lambda = LevelWeight::parse_selector("L1", 2);
  CHECK_THROWS_AS(bosonic_K_vacuum(s, reg), SpecError);
}

TEST_CASE("widening the beta box changes nothing") {
  RMatrixRegistry reg;
  for (int n = 2; n <= 3; ++n)
    for (int L = 1; L <= 3; ++L) {
      const auto s = spec_of(n, ones(L), 2);
      const auto base = bosonic_K(s, reg);
      const auto wide = bosonic_K(s, reg, BosonicOptions{2, Exec::serial});
      CHECK(wide.poly == base.poly);
      CHECK(wide.summand_count == base.summand_count);
      for (std::size_t i = 0; i < base.box.lo.size(); ++i) {
        CHECK(wide.box.lo[i] == base.box.lo[i] - 2);
        CHECK(wide.box.hi[i] == base.box.hi[i] + 2);
      }
    }
}

TEST_CASE("level-1 identity for single columns") {
  RMatrixRegistry reg;
  int applicable = 0;
  for (int n = 2; n <= 3; ++n)
    for (int L = 0; L <= 3; ++L)
      for (const auto& shapes : column_products(n, L))
        for (const auto& Lam : level_dominant_weights(n, 1))
          for (const auto& Lp : level_dominant_weights(n, 1)) {
            auto s = spec_of(n, shapes, 1);
            s.Lambda = Lam;
            s.LambdaPrime = Lp;
            const auto rep = identity_level1(s, reg);
            if (!rep.applicable) {
              CHECK(rep.lhs.is_zero());
              continue;
            }
            ++applicable;
            CHECK(rep.lhs.is_monomial());
            CHECK(rep.equal);
          }
  CHECK(applicable > 0);
  CHECK_THROWS_AS(identity_level1(spec_of(2, {{1, 2}}, 2), reg), SpecError);
}

TEST_CASE("level-0 identity") {
  RMatrixRegistry reg;
  const auto empty = identity_level0(spec_of(2, {}), reg);
  CHECK(empty.lhs == LaurentPoly::constant(1));
  CHECK(empty.equal);
  for (int L = 1; L <= 5; ++L) {
    const auto rep = identity_level0(spec_of(2, ones(L)), reg);
    CHECK(rep.lhs.is_zero());
    CHECK(rep.equal);
    CHECK((rep.summand_count > 0) == (L % 2 == 0));
  }
  CHECK(identity_level0(spec_of(3, {{1, 1}, {2, 1}}), reg).lhs.is_zero());
  CHECK_THROWS_AS(identity_level0(spec_of(3, {{1, 2}}), reg), SpecError);
}

TEST_CASE("level-0 pairing certificate") {
  RMatrixRegistry reg;
  const auto one = involution_level0(spec_of(2, ones(1)), reg);
  CHECK(one.valid());
  CHECK(one.summand_count % 2 == 0);
  const auto two = involution_level0(spec_of(2, ones(2)), reg);
  CHECK(two.summand_count == 4);
  CHECK(two.pair_count == 2);
  CHECK(two.valid());
  const auto four = involution_level0(spec_of(2, ones(4)), reg);
  CHECK(four.summand_count == 16);
  CHECK(four.pair_count == 8);
  for (int n = 2; n <= 4; ++n)
    for (int L = 1; L <= (n == 4 ? 2 : 3); ++L)
      for (const auto& shapes : column_products(n, L)) {
        const auto cert = involution_level0(spec_of(n, shapes), reg);
        CHECK(cert.valid());
        CHECK(cert.total.is_zero());
        CHECK(cert.failures.empty());
      }
  CHECK_THROWS_AS(involution_level0(spec_of(2, {}), reg), SpecError);
}

TEST_CASE("level-0 summands satisfy the weight condition") {
  RMatrixRegistry reg;
  const auto s = spec_of(3, {{1, 1}, {2, 1}});
  const TensorCrystal B = s.crystal();
  const auto summands = level0_summands(s, reg);
  CHECK(!summands.empty());
  for (const auto& x : summands) {
    // wt(b) = -rho + tau^{-1}(rho - n beta) modulo (1,...,1)
    const auto rho = FiniteWeight::rho(3);
    const auto want = x.w.tau().inverse().act(rho - 3 * x.w.beta()) - rho;
    CHECK(B.weight(x.b).same_class(want));
  }
}
