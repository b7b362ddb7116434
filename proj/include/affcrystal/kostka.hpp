#pragma once

// Energy-graded generating functions of restricted paths.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affcrystal/kernels.hpp"

namespace affcrystal {

using BigInt = boost::multiprecision::cpp_int;

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tensor product B = B^{k_L,l_L} (x) ... (x) B^{k_1,l_1} plus the optional
/// level data for level-restricted questions.
struct CrystalSpec {
  int n = 2;
  std::vector<RectShape> shapes;  // leftmost factor first
  std::optional<int> level;
  std::optional<LevelWeight> Lambda;
  std::optional<LevelWeight> LambdaPrime;
  std::optional<RectShape> b0;

  /// Throws SpecError naming the violated invariant. With check_levels off
  /// the l_j <= level condition is skipped (used for the level-0 sums).
  void validate(bool check_levels = true) const;
  TensorCrystal crystal() const { return TensorCrystal(n, shapes); }
  /// Number of boxes sum_j k_j l_j.
  int total_size() const;
  /// level * Lambda_0 unless Lambda is set.
  LevelWeight Lambda_or_vacuum() const;
  LevelWeight LambdaPrime_or_vacuum() const;
  /// B^{1,level} unless overridden.
  RectShape ground_shape() const;
  /// Whether E needs the ground element b0 (Lambda not a multiple of Lambda_0, or b0 given).
  bool uses_ground() const;
};

struct KostkaResult {
  LaurentPoly poly;
  std::uint64_t path_count = 0;
};

/// Energy function used for level-restricted sums of spec.
EnergyFunction level_energy(const CrystalSpec& spec, RMatrixRegistry& registry);

/// sum of q^{E_B(b)} over classically restricted b of weight lambda.
KostkaResult kostka_classical(const CrystalSpec& spec, const FiniteWeight& lambda, RMatrixRegistry& registry,
                              Exec exec = Exec::parallel);

/// sum of q^{E(b)} over b with b (x) u_Lambda highest of weight Lambda'.
KostkaResult kostka_level(const CrystalSpec& spec, RMatrixRegistry& registry, Exec exec = Exec::parallel);

/// Explicit list of the level-restricted paths of spec, in index order.
std::vector<Path> level_restricted_paths(const CrystalSpec& spec);

/// Partitions of total with at most n parts, padded to length n, in
/// decreasing lexicographic order.
std::vector<FiniteWeight> dominant_weights(int n, int total);

/// Multiplicities of every irreducible V(lambda) in the product of the
/// rectangle Schur polynomials, by monomial expansion (Jacobi-Trudi) and
/// leading-term peeling. Independent of the crystal code.
std::map<FiniteWeight, BigInt> multiplicity_table(int n, const std::vector<RectShape>& shapes);
BigInt multiplicity_oracle(const CrystalSpec& spec, const FiniteWeight& lambda);

/// Checks the extra e_0 hypothesis on b (x) b0 under B_j (x) B_0 -> B_0 (x) B_j.
struct HypothesisCheck {
  bool holds = true;
  std::vector<std::string> violations;
};
HypothesisCheck check_ground_hypothesis(const CrystalSpec& spec, RMatrixRegistry& registry);

}  // namespace affcrystal
