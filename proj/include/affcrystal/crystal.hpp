#pragma once

// Kirillov-Reshetikhin crystals B^{k,l} of type A_{n-1}^{(1)}, realized on
// k x l column-strict tableaux with entries in {1..n}.
//
// Classical operators (i = 1..n-1) use the signature rule on the row reading
// word (rows bottom to top, each row left to right): an i+1 to the left of an
// i cancels it, f_i raises the rightmost uncancelled i, e_i lowers the
// leftmost uncancelled i+1. The affine operators are conjugated by
// promotion: e_0 = pr^{-1} e_1 pr.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affcrystal/core.hpp"

namespace affcrystal {

struct RectShape {
  int rows = 1;
  int cols = 1;

  int size() const { return rows * cols; }
  /// "KxL"
  std::string to_string() const;
  static RectShape parse(std::string_view text);

  friend bool operator==(const RectShape&, const RectShape&) = default;
  friend auto operator<=>(const RectShape&, const RectShape&) = default;
};

/// Rectangular filling stored row-major. Equality is structural.
class Tableau {
 public:
  Tableau() = default;
  Tableau(RectShape shape, std::vector<int> row_major);

  const RectShape& shape() const { return shape_; }
  int at(int r, int c) const { return entries_[static_cast<std::size_t>(r * shape_.cols + c)]; }
  const std::vector<int>& entries() const { return entries_; }

  /// Rows weakly increase, columns strictly increase.
  bool is_column_strict() const;
  /// Content vector: coordinate m-1 counts the entries equal to m.
  FiniteWeight content(int n) const;
  int count(int value) const;

  /// Rows joined by '/', entries by ',' (e.g. "1,1/2,3").
  std::string to_string() const;
  /// Inverse of to_string(); the shape is read off the text.
  static Tableau parse(std::string_view text);

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  friend class RectCrystal;
  RectShape shape_;
  std::vector<int> entries_;
};

struct TableauHash {
  std::size_t operator()(const Tableau& t) const noexcept;
};

/// B^{k,l} for a fixed rank n.
class RectCrystal {
 public:
  RectCrystal(int n, RectShape shape);

  int rank() const { return n_; }
  const RectShape& shape() const { return shape_; }
  /// A crystal B^{k,l} has level l.
  int level() const { return shape_.cols; }

  /// All column-strict fillings, sorted.
  std::vector<Tableau> elements() const;
  bool contains(const Tableau& b) const;
  /// Row r filled with r; the classical highest weight element.
  Tableau highest_weight() const;

  FiniteWeight weight(const Tableau& b) const { return b.content(n_); }

  std::optional<Tableau> f(const Tableau& b, int i) const;
  std::optional<Tableau> e(const Tableau& b, int i) const;
  int epsilon(const Tableau& b, int i) const;
  int phi(const Tableau& b, int i) const;
  /// Crystal reflection s_i.
  Tableau reflect(const Tableau& b, int i) const;

  /// Schuetzenberger promotion: removes the n's, slides outward, adds one and
  /// fills the vacated cells with 1. Shifts content cyclically.
  Tableau promotion(const Tableau& b) const;
  Tableau promotion_inverse(const Tableau& b) const;

  friend bool operator==(const RectCrystal&, const RectCrystal&) = default;

 private:
  struct Signature {
    std::vector<int> unmatched_lower;  // word positions holding i, left to right
    std::vector<int> unmatched_upper;  // word positions holding i+1, left to right
  };
  Signature signature(const Tableau& b, int i) const;
  std::vector<int> reading_cells() const;
  void check_index(int i) const;
  std::optional<Tableau> f_classical(const Tableau& b, int i) const;
  std::optional<Tableau> e_classical(const Tableau& b, int i) const;

  int n_;
  RectShape shape_;
};

}  // namespace affcrystal

template <>
struct std::hash<affcrystal::Tableau> : affcrystal::TableauHash {};
