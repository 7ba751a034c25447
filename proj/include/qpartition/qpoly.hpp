#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpartition/integer.hpp"

namespace qpart {

// Polynomial in q with exact coefficients. Trailing zeros are always trimmed,
// so the zero polynomial has an empty coefficient vector and no degree.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);

  static QPoly monomial(Integer c, int degree);
  static QPoly one() { return monomial(1, 0); }
  // Accepts "q^20+2q^18+q", "1", "0"; whitespace is ignored.
  static QPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<int> degree() const;
  std::optional<int> low_degree() const;
  const Integer& operator[](int d) const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  QPoly& operator+=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly&) const = default;

  // Descending, e.g. "q^30 + 2q^28 + 1"; zero prints as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// Multiply by q^k. Negative k is only allowed on the zero polynomial.
QPoly shift(const QPoly& p, int k);
// q -> q^base, base >= 1.
QPoly stretch(const QPoly& p, int base);
bool is_nonnegative(const QPoly& p);

// Gaussian binomial [n over k] in q^base; zero for negative n, k or k > n.
QPoly qbinomial(int n, int k, int base);

}  // namespace qpart
