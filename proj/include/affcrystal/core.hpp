#pragma once

// Weights, permutations and the affine Weyl group of type A_{n-1}^{(1)}.
//
// Finite weights live in Z^n with basis eps_1..eps_n. The finite weight
// lattice of sl_n is Z^n modulo (1,...,1); most operations here are
// invariant under that shift and callers compare with same_class() when the
// representative does not matter.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace affcrystal {

class FiniteWeight {
 public:
  FiniteWeight() = default;
  explicit FiniteWeight(std::vector<int> coords) : coords_(std::move(coords)) {}

  static FiniteWeight zero(int n) { return FiniteWeight(std::vector<int>(n, 0)); }
  /// (n-1, n-2, ..., 1, 0)
  static FiniteWeight rho(int n);
  /// eps_1 - eps_n
  static FiniteWeight theta(int n);
  /// eps_i - eps_{i+1}, 1 <= i <= n-1
  static FiniteWeight simple_root(int n, int i);
  /// eps_1 + ... + eps_i, 0 <= i <= n
  static FiniteWeight fundamental(int n, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }
  int& operator[](int i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }

  std::int64_t sum() const;
  bool in_root_lattice() const { return sum() == 0; }
  /// Weakly decreasing coordinates.
  bool is_dominant() const;
  /// Representative of the class modulo (1,...,1) with last coordinate 0.
  FiniteWeight normalized() const;
  bool same_class(const FiniteWeight& other) const;

  FiniteWeight& operator+=(const FiniteWeight& o);
  FiniteWeight& operator-=(const FiniteWeight& o);
  friend FiniteWeight operator+(FiniteWeight a, const FiniteWeight& b) { return a += b; }
  friend FiniteWeight operator-(FiniteWeight a, const FiniteWeight& b) { return a -= b; }
  friend FiniteWeight operator*(int s, FiniteWeight a);
  friend bool operator==(const FiniteWeight&, const FiniteWeight&) = default;
  friend auto operator<=>(const FiniteWeight&, const FiniteWeight&) = default;

  /// "a1,a2,...,an"
  std::string to_string() const;
  static FiniteWeight parse(std::string_view text);

 private:
  std::vector<int> coords_;
};

/// Ordinary dot product. Throws std::invalid_argument on length mismatch.
std::int64_t dot(const FiniteWeight& a, const FiniteWeight& b);

/// Permutation of {0..n-1}; acts on Z^n by (tau mu)_{tau(i)} = mu_i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// All n! permutations in lexicographic order of their image vectors.
  static std::vector<Permutation> all(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  /// Composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  /// (-1)^{number of inversions}
  int sign() const;
  FiniteWeight act(const FiniteWeight& mu) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Affine weight level * Lambda_0 + finite + delta_coeff * delta.
///
/// The finite part is an element of Z^n standing for its class modulo
/// (1,...,1). delta_coeff is an integer since a_0 = 1 in type A.
struct LevelWeight {
  int level = 0;
  FiniteWeight finite;
  std::int64_t delta_coeff = 0;

  int rank() const { return finite.rank(); }

  /// sum_i mult[i] * Lambda_i, i = 0..n-1.
  static LevelWeight from_fundamentals(const std::vector<int>& mult);
  /// Symbolic selector such as "L0", "2L0", "L0+L1", "L1+L2".
  static LevelWeight parse_selector(std::string_view text, int n);
  std::string to_selector() const;

  /// <alpha_i^vee, this>, i in {0..n-1}.
  int coroot_pairing(int i) const;
  /// Multiplicities of Lambda_0..Lambda_{n-1}.
  std::vector<int> fundamental_multiplicities() const;
  bool is_dominant() const;
  /// level * Lambda_0 (finite part zero)
  bool is_vacuum() const;

  /// Simple reflection r_i; r_0 = t_theta r_theta.
  LevelWeight reflect(int i) const;

  /// Equal level and delta coefficient, finite parts equal modulo (1,...,1).
  bool same_class(const LevelWeight& other) const;

  friend bool operator==(const LevelWeight&, const LevelWeight&) = default;
};

/// w = t_beta o tau with beta in the root lattice M = {sum = 0}.
///
/// Translations are even, so sign(w) = sign(tau).
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(FiniteWeight beta, Permutation tau);
  static AffineWeylElement identity(int n);

  const FiniteWeight& beta() const { return beta_; }
  const Permutation& tau() const { return tau_; }
  int rank() const { return tau_.size(); }
  int sign() const { return tau_.sign(); }

  /// w * r_i for i in {0..n-1}.
  AffineWeylElement compose_reflection(int i) const;
  /// Action on weights of any level: tau first, then t_beta.
  LevelWeight act(const LevelWeight& w) const;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;

 private:
  FiniteWeight beta_;
  Permutation tau_;
};

inline LevelWeight translate_action(const AffineWeylElement& w, const LevelWeight& L) { return w.act(L); }

}  // namespace affcrystal
