#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "qpartition/integer.hpp"

namespace qpart {

// Truncated power series in q and t. Degrees 0..max_q and 0..max_t are
// inclusive; storage is one dense q-vector per t-degree.
class BiSeries {
 public:
  BiSeries(int max_q, int max_t);

  int max_q() const noexcept { return max_q_; }
  int max_t() const noexcept { return max_t_; }

  // Checked read; throws InvalidInput outside the window.
  const Integer& coeff(int dq, int dt) const;

  // Unchecked access for builders.
  Integer& at(int dq, int dt) { return c_[index(dq, dt)]; }
  const Integer& at(int dq, int dt) const { return c_[index(dq, dt)]; }
  std::span<Integer> row(int dt);
  std::span<const Integer> row(int dt) const;

  bool is_zero() const;
  bool operator==(const BiSeries&) const = default;

  BiSeries& operator+=(const BiSeries& other);
  BiSeries& operator-=(const BiSeries& other);

 private:
  std::size_t index(int dq, int dt) const {
    return static_cast<std::size_t>(dt) * (max_q_ + 1) + dq;
  }
  int max_q_;
  int max_t_;
  std::vector<Integer> c_;
};

enum class PochhammerConvention {
  Standard,   // (x;q)_n = (1-x)...(1-xq^{n-1})
  Inclusive,  // one more factor, (1-x)...(1-xq^n)
};

BiSeries make_monomial(const Integer& c, int dq, int dt, int max_q, int max_t);
BiSeries one(int max_q, int max_t);

BiSeries add(const BiSeries& a, const BiSeries& b);
BiSeries sub(const BiSeries& a, const BiSeries& b);
BiSeries mul(const BiSeries& a, const BiSeries& b);
BiSeries scale(const BiSeries& a, const Integer& c);
inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return sub(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return mul(a, b); }

// a * c t^dt q^dq, keeping a's window.
BiSeries mul_monomial(const BiSeries& a, const Integer& c, int dq, int dt);
// a / (1 - t^dt q^dq).
BiSeries mul_geometric_inverse(const BiSeries& a, int dt, int dq);
// a * (1 - t^dt q^dq).
BiSeries mul_binomial_factor(const BiSeries& a, int dt, int dq);

// 1/(x; q^base)_inf with x = t^x_dt q^x_dq, via the Euler sum.
BiSeries inv_pochhammer(int x_dt, int x_dq, int base_dq, int max_q, int max_t);
// (x; q^base)_inf via the alternating Euler sum.
BiSeries neg_pochhammer_alternating(int x_dt, int x_dq, int base_dq, int max_q,
                                    int max_t);
BiSeries finite_pochhammer(int x_dt, int x_dq, int base_dq, int n, int max_q, int max_t,
                           PochhammerConvention conv = PochhammerConvention::Standard);
// 1/(x; q^base)_n, standard convention.
BiSeries inv_finite_pochhammer(int x_dt, int x_dq, int base_dq, int n, int max_q,
                               int max_t);

// t -> t q^t_qshift, then q -> q^q_stretch. Terms pushed past max_q are dropped.
BiSeries substitute_scale(const BiSeries& a, int t_qshift, int q_stretch);
// q^n t^m -> q^{n+m^2} t^m.
BiSeries apply_staircase(const BiSeries& a);
// Sum over t, as a series with max_t = 0.
BiSeries t_marginal(const BiSeries& a);
BiSeries truncate(const BiSeries& a, int max_q, int max_t);

Integer coeff(const BiSeries& a, int n, int m);

nlohmann::json to_json(const BiSeries& a);
BiSeries series_from_json(const nlohmann::json& j);

}  // namespace qpart
