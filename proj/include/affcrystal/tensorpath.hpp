#pragma once

// Tensor products of rectangle crystals and paths.
//
// Factors are stored leftmost first, so factors.back() is b_1 in
// b = b_L (x) ... (x) b_1. The two-factor rule is
//
//   phi_i(b2 (x) b1) = phi_i(b2) + max(0, phi_i(b1) - eps_i(b2))
//   eps_i(b2 (x) b1) = eps_i(b1) + max(0, eps_i(b2) - phi_i(b1))
//
// with f_i acting on b1 iff phi_i(b1) > eps_i(b2) and e_i acting on b1 iff
// phi_i(b1) >= eps_i(b2). Longer products are folded from the left.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affcrystal/crystal.hpp"

namespace affcrystal {

struct Path {
  std::vector<Tableau> factors;

  std::size_t length() const { return factors.size(); }
  /// Factor strings joined by '|', leftmost first ("2|1" is [2] (x) [1]).
  std::string to_string() const;
  static Path parse(std::string_view text);

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// String data (phi_i, eps_i) of one element for one color.
struct StringPair {
  int phi = 0;
  int eps = 0;
};

/// phi/eps of b2 (x) b1 from those of the factors.
StringPair tensor_strings(StringPair left, StringPair right);

/// Stand-in for u_Lambda in B(Lambda): eps_i = 0, phi_i = <alpha_i^vee, Lambda>.
struct FormalHighestVector {
  LevelWeight Lambda;
  int epsilon(int) const { return 0; }
  int phi(int i) const { return Lambda.coroot_pairing(i); }
};

class TensorCrystal {
 public:
  TensorCrystal(int n, std::vector<RectShape> shapes);

  int rank() const { return n_; }
  std::size_t length() const { return factors_.size(); }
  const std::vector<RectShape>& shapes() const { return shapes_; }
  /// Factor crystal at list position pos (0 = leftmost).
  const RectCrystal& factor(std::size_t pos) const { return factors_[pos]; }
  const std::vector<Tableau>& factor_elements(std::size_t pos) const { return elements_[pos]; }
  /// Maximum level among the factors (0 for the empty product).
  int level() const;

  std::uint64_t cardinality() const;
  /// Mixed-radix decoding, rightmost factor varying fastest.
  Path element_at(std::uint64_t index) const;
  /// Streams every path in index order.
  void for_each(const std::function<void(const Path&)>& visit) const;
  bool contains(const Path& b) const;

  FiniteWeight weight(const Path& b) const;
  StringPair strings(const Path& b, int i) const;
  int epsilon(const Path& b, int i) const { return strings(b, i).eps; }
  int phi(const Path& b, int i) const { return strings(b, i).phi; }

  /// List position of the factor f_i (resp. e_i) acts on, if defined.
  std::optional<std::size_t> f_position(const Path& b, int i) const;
  std::optional<std::size_t> e_position(const Path& b, int i) const;

  std::optional<Path> f(const Path& b, int i) const;
  std::optional<Path> e(const Path& b, int i) const;
  Path reflect(const Path& b, int i) const;

  /// eps_i / phi_i of b (x) u_Lambda.
  StringPair strings_with(const Path& b, const FormalHighestVector& u, int i) const;

 private:
  std::vector<StringPair> factor_strings(const Path& b, int i) const;

  int n_;
  std::vector<RectShape> shapes_;
  std::vector<RectCrystal> factors_;
  std::vector<std::vector<Tableau>> elements_;
};

/// e_i undefined for every i in J = {1..n-1}.
bool is_classically_restricted(const TensorCrystal& B, const Path& b);

/// b (x) u_Lambda is annihilated by every e_i, i in I. Throws if Lambda is
/// not dominant or some factor has level above that of Lambda.
bool is_level_restricted(const TensorCrystal& B, const Path& b, const LevelWeight& Lambda);

/// Lambda' = Lambda + wt(b), finite part normalized, delta coefficient 0.
LevelWeight weight_out(const TensorCrystal& B, const Path& b, const LevelWeight& Lambda);

/// All classically restricted paths of weight lambda, in index order.
std::vector<Path> classically_restricted(const TensorCrystal& B, const FiniteWeight& lambda);

}  // namespace affcrystal
