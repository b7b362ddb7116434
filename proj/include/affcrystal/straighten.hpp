#pragma once

// Straightening of Schur symbols s_alpha at level l.
//
// With mu = alpha + rho and K = l + n the moves are the level-shifted affine
// reflections: step i != 0 swaps mu_i and mu_{i+1}, step 0 replaces
// (mu_1, mu_n) by (mu_n + K, mu_1 - K). Each move flips the sign and step 0
// multiplies by q^{l + 1 - alpha_1 + alpha_n}.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affcrystal/kostka.hpp"

namespace affcrystal {

struct SchurSymbol {
  std::vector<int> alpha;
  int sign = 1;
  int qpow = 0;
  int level = 1;

  int rank() const { return static_cast<int>(alpha.size()); }
  friend bool operator==(const SchurSymbol&, const SchurSymbol&) = default;
  friend auto operator<=>(const SchurSymbol&, const SchurSymbol&) = default;
};

/// Applies the move for i in {0..n-1}.
SchurSymbol straighten_step(const SchurSymbol& sym, int i);

/// Zero, or sign * q^qpow * s_beta with beta dominant and beta_1 - beta_n <= level.
struct NormalForm {
  bool zero = false;
  int sign = 1;
  int qpow = 0;
  std::vector<int> beta;

  std::string to_string() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// beta dominant with beta_1 - beta_n <= level.
bool is_level_dominant(const std::vector<int>& beta, int level);

/// Closed form: sort-and-translate mu = alpha + rho into the fundamental alcove.
NormalForm normalize(const SchurSymbol& sym);

/// Picks one applicable move among the candidates (sorted increasingly).
using StepChooser = std::function<int(const std::vector<int>& candidates)>;

/// Rewrites with straighten_step until no move brings mu closer to the
/// alcove; zero if the final mu lies on a wall. The chooser defaults to the
/// smallest candidate. Throws std::logic_error if max_steps is exceeded.
NormalForm normalize_by_rewriting(const SchurSymbol& sym, const StepChooser& choose = {}, int max_steps = 100000);

/// Every normal form reachable by some order of moves (a confluent system
/// returns exactly one).
std::vector<NormalForm> all_rewrite_normal_forms(const SchurSymbol& sym, std::size_t max_states = 200000);

/// Pi e^{level Lambda_0 + alpha} = sign q^qpow ch V(Lambda'), or zero.
struct PiTerm {
  bool zero = false;
  int sign = 1;
  int qpow = 0;
  LevelWeight LambdaPrime;
};
PiTerm pi_on_character(int n, int level, const FiniteWeight& alpha);

/// sum_b q^{E(b)} Pi e^{Lambda + wt(b)} collected per Lambda' (finite part
/// normalized, delta coefficient 0). Zero polynomials are dropped.
std::map<FiniteWeight, LaurentPoly> pi_character_sum(const CrystalSpec& spec, RMatrixRegistry& registry,
                                                     Exec exec = Exec::parallel);

/// Dominant level weights sum_i m_i Lambda_i with sum m_i = level.
std::vector<LevelWeight> level_dominant_weights(int n, int level);

}  // namespace affcrystal
