#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affcrystal {

/// Exact Laurent polynomial in q with integer coefficients.
///
/// Stored sparsely as exponent -> coefficient with no zero coefficients, so
/// structural equality is polynomial equality. Every coefficient operation is
/// overflow checked and throws std::overflow_error instead of wrapping.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;

  static LaurentPoly monomial(int exponent, Coeff coeff = 1);
  static LaurentPoly constant(Coeff c) { return monomial(0, c); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  Coeff coeff(int exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;
  const std::map<int, Coeff>& terms() const { return terms_; }

  /// Value at q = 1.
  Coeff at_one() const;

  void add_term(int exponent, Coeff coeff);
  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// [[exp, coeff], ...] sorted by exponent.
  std::vector<std::pair<int, Coeff>> pairs() const;
  /// Human readable, e.g. "q^-2 + 3*q + 1".
  std::string to_string() const;

 private:
  std::map<int, Coeff> terms_;
};

namespace detail {
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
int checked_exp_add(int a, int b);
}  // namespace detail

}  // namespace affcrystal
