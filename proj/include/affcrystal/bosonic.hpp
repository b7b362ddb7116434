#pragma once

// Alternating sums over the affine Weyl group W = M x| S_n.
//
// A summand is (tau, beta, b) with beta in M and
//   wt(b) = -Lambda - rho + tau^{-1}(Lambda' - (level + n) beta + rho)
// modulo (1,...,1), weighted by sign(tau) q^{E(b) + (Lambda' + rho | beta) - (level + n)|beta|^2 / 2}.

#include <cstdint>
#include <string>
#include <vector>

#include "affcrystal/kostka.hpp"

namespace affcrystal {

struct BosonicOptions {
  /// Extra slack added to the beta box on each side.
  int widen = 0;
  Exec exec = Exec::parallel;
};

/// Per-coordinate bounds for beta outside which every fiber is empty.
struct BetaBox {
  std::vector<int> lo;
  std::vector<int> hi;
  std::string to_string() const;
};

struct BosonicResult {
  LaurentPoly poly;
  std::uint64_t summand_count = 0;  // (tau, beta, b) triples with a path
  BetaBox box;
};

/// Sum over (tau, beta, b). Level 0 is allowed here with Lambda = Lambda' = 0
/// and the plain energy E_B.
BosonicResult bosonic_K(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts = {});

/// Lambda = Lambda' = level * Lambda_0 evaluated with the vacuum exponent
/// -sum_i ((level + n) beta_i^2 / 2 + i beta_i), i counted from 1.
BosonicResult bosonic_K_vacuum(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts = {});

struct IdentityReport {
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool equal = false;
  /// False when the identity's hypothesis does not hold (no restricted path at level 1).
  bool applicable = true;
  std::uint64_t summand_count = 0;
  BetaBox box;
  std::string note;
};

/// Level 1, factors B^{k,1}: the alternating sum equals q^{E(p)} for the
/// unique restricted path p.
IdentityReport identity_level1(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts = {});

/// Level 0, factors B^{k,1}: the alternating sum equals 1 for the empty
/// product and 0 otherwise.
IdentityReport identity_level0(const CrystalSpec& spec, RMatrixRegistry& registry, const BosonicOptions& opts = {});

struct LevelZeroSummand {
  AffineWeylElement w;
  Path b;
  int exponent = 0;
};

/// Result of pairing the level-0 summands by (w, b) -> (w r_v, s_v e_v(b)).
struct PairingCertificate {
  std::uint64_t summand_count = 0;
  std::uint64_t pair_count = 0;
  bool involutive = true;
  bool fixed_point_free = true;
  bool signs_opposite = true;
  bool exponents_equal = true;
  bool color_preserved = true;
  LaurentPoly total;
  std::vector<std::string> failures;

  bool valid() const {
    return involutive && fixed_point_free && signs_opposite && exponents_equal && color_preserved &&
           2 * pair_count == summand_count;
  }
};

/// Every level-0 summand, in a deterministic order.
std::vector<LevelZeroSummand> level0_summands(const CrystalSpec& spec, RMatrixRegistry& registry);

/// Throws std::logic_error if an image violates the weight condition.
PairingCertificate involution_level0(const CrystalSpec& spec, RMatrixRegistry& registry);

}  // namespace affcrystal
