#include "qpartition/biseries.hpp"

#include <algorithm>
#include <string>

#include "qpartition/error.hpp"

namespace qpart {

namespace {

void check_window(int max_q, int max_t) {
  if (max_q < 0 || max_t < 0)
    throw InvalidInput("negative truncation window (" + std::to_string(max_q) + ", " +
                       std::to_string(max_t) + ")");
}

void check_base(int x_dt, int x_dq, int base_dq) {
  if (x_dt < 0 || x_dq < 0) throw InvalidInput("negative degree in Pochhammer argument");
  if (base_dq < 1) throw InvalidInput("Pochhammer base must have q-degree >= 1");
  if (x_dt == 0 && x_dq == 0) throw InvalidInput("Pochhammer argument x = 1 is not invertible");
}

}  // namespace

BiSeries::BiSeries(int max_q, int max_t) : max_q_(max_q), max_t_(max_t) {
  check_window(max_q, max_t);
  c_.resize(static_cast<std::size_t>(max_q + 1) * (max_t + 1));
}

const Integer& BiSeries::coeff(int dq, int dt) const {
  if (dq < 0 || dq > max_q_ || dt < 0 || dt > max_t_)
    throw InvalidInput("coefficient (q^" + std::to_string(dq) + ", t^" + std::to_string(dt) +
                       ") outside window (" + std::to_string(max_q_) + ", " +
                       std::to_string(max_t_) + ")");
  return at(dq, dt);
}

std::span<Integer> BiSeries::row(int dt) {
  return {c_.data() + index(0, dt), static_cast<std::size_t>(max_q_ + 1)};
}

std::span<const Integer> BiSeries::row(int dt) const {
  return {c_.data() + index(0, dt), static_cast<std::size_t>(max_q_ + 1)};
}

bool BiSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c == 0; });
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
  *this = add(*this, other);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
  *this = sub(*this, other);
  return *this;
}

BiSeries make_monomial(const Integer& c, int dq, int dt, int max_q, int max_t) {
  BiSeries s(max_q, max_t);
  s.coeff(dq, dt);  // bounds check
  s.at(dq, dt) = c;
  return s;
}

BiSeries one(int max_q, int max_t) { return make_monomial(1, 0, 0, max_q, max_t); }

BiSeries truncate(const BiSeries& a, int max_q, int max_t) {
  if (max_q == a.max_q() && max_t == a.max_t()) return a;
  BiSeries out(std::min(max_q, a.max_q()), std::min(max_t, a.max_t()));
  for (int m = 0; m <= out.max_t(); ++m)
    for (int n = 0; n <= out.max_q(); ++n) out.at(n, m) = a.at(n, m);
  return out;
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
  BiSeries out = truncate(a, b.max_q(), b.max_t());
  for (int m = 0; m <= out.max_t(); ++m)
    for (int n = 0; n <= out.max_q(); ++n) out.at(n, m) += b.at(n, m);
  return out;
}

BiSeries sub(const BiSeries& a, const BiSeries& b) {
  BiSeries out = truncate(a, b.max_q(), b.max_t());
  for (int m = 0; m <= out.max_t(); ++m)
    for (int n = 0; n <= out.max_q(); ++n) out.at(n, m) -= b.at(n, m);
  return out;
}

BiSeries scale(const BiSeries& a, const Integer& c) {
  BiSeries out = a;
  for (int m = 0; m <= out.max_t(); ++m)
    for (auto& x : out.row(m)) x *= c;
  return out;
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  const int Q = std::min(a.max_q(), b.max_q());
  const int T = std::min(a.max_t(), b.max_t());
  BiSeries out(Q, T);
  Integer tmp;
  for (int ma = 0; ma <= T; ++ma)
    for (int na = 0; na <= Q; ++na) {
      const Integer& ca = a.at(na, ma);
      if (ca == 0) continue;
      for (int mb = 0; ma + mb <= T; ++mb)
        for (int nb = 0; na + nb <= Q; ++nb) {
          const Integer& cb = b.at(nb, mb);
          if (cb == 0) continue;
          boost::multiprecision::multiply(tmp, ca, cb);
          out.at(na + nb, ma + mb) += tmp;
        }
    }
  return out;
}

BiSeries mul_monomial(const BiSeries& a, const Integer& c, int dq, int dt) {
  if (dq < 0 || dt < 0) throw InvalidInput("negative monomial degree");
  BiSeries out(a.max_q(), a.max_t());
  if (c == 0) return out;
  for (int m = 0; m + dt <= a.max_t(); ++m)
    for (int n = 0; n + dq <= a.max_q(); ++n) {
      const Integer& x = a.at(n, m);
      if (x != 0) out.at(n + dq, m + dt) = x * c;
    }
  return out;
}

BiSeries mul_geometric_inverse(const BiSeries& a, int dt, int dq) {
  if (dt < 0 || dq < 0) throw InvalidInput("negative degree in geometric factor");
  if (dt == 0 && dq == 0) throw InvalidInput("1/(1 - 1) is not a power series");
  // out = a + x * out, filled in increasing degree order
  BiSeries out = a;
  for (int m = dt; m <= out.max_t(); ++m)
    for (int n = dq; n <= out.max_q(); ++n) {
      const Integer& prev = out.at(n - dq, m - dt);
      if (prev != 0) out.at(n, m) += prev;
    }
  return out;
}

BiSeries mul_binomial_factor(const BiSeries& a, int dt, int dq) {
  if (dt < 0 || dq < 0) throw InvalidInput("negative degree in binomial factor");
  return a - mul_monomial(a, 1, dq, dt);
}

BiSeries inv_finite_pochhammer(int x_dt, int x_dq, int base_dq, int n, int max_q, int max_t) {
  check_base(x_dt, x_dq, base_dq);
  if (n < 0) throw InvalidInput("negative Pochhammer length");
  BiSeries out = one(max_q, max_t);
  for (int k = 0; k < n; ++k) {
    if (x_dq + base_dq * k > max_q) break;
    out = mul_geometric_inverse(out, x_dt, x_dq + base_dq * k);
  }
  return out;
}

BiSeries finite_pochhammer(int x_dt, int x_dq, int base_dq, int n, int max_q, int max_t,
                           PochhammerConvention conv) {
  if (n < 0) throw InvalidInput("negative Pochhammer length");
  if (x_dt < 0 || x_dq < 0 || base_dq < 0) throw InvalidInput("negative degree");
  int factors = conv == PochhammerConvention::Standard ? n : n + 1;
  BiSeries out = one(max_q, max_t);
  for (int k = 0; k < factors; ++k) {
    if (x_dq + base_dq * k > max_q || x_dt > max_t) break;
    out = mul_binomial_factor(out, x_dt, x_dq + base_dq * k);
  }
  return out;
}

namespace {

// Sum_n sign^n x^n q^{base*n(n-1)/2 * tri} / (q^base; q^base)_n
BiSeries euler_sum(int x_dt, int x_dq, int base_dq, int max_q, int max_t, bool alternating) {
  check_base(x_dt, x_dq, base_dq);
  BiSeries total = one(max_q, max_t);
  BiSeries denom = one(max_q, max_t);  // 1/(q^b;q^b)_n
  for (int n = 1;; ++n) {
    long long dt = static_cast<long long>(x_dt) * n;
    long long dq = static_cast<long long>(x_dq) * n;
    if (alternating) dq += static_cast<long long>(base_dq) * n * (n - 1) / 2;
    if (dt > max_t || dq > max_q) break;
    if (base_dq * n <= max_q) denom = mul_geometric_inverse(denom, 0, base_dq * n);
    Integer sign = (alternating && n % 2) ? -1 : 1;
    total += mul_monomial(denom, sign, static_cast<int>(dq), static_cast<int>(dt));
  }
  return total;
}

}  // namespace

BiSeries inv_pochhammer(int x_dt, int x_dq, int base_dq, int max_q, int max_t) {
  return euler_sum(x_dt, x_dq, base_dq, max_q, max_t, false);
}

BiSeries neg_pochhammer_alternating(int x_dt, int x_dq, int base_dq, int max_q, int max_t) {
  return euler_sum(x_dt, x_dq, base_dq, max_q, max_t, true);
}

BiSeries substitute_scale(const BiSeries& a, int t_qshift, int q_stretch) {
  if (q_stretch < 1) throw InvalidInput("q_stretch must be >= 1");
  if (t_qshift < 0) throw InvalidInput("t_qshift must be >= 0");
  BiSeries out(a.max_q(), a.max_t());
  for (int m = 0; m <= a.max_t(); ++m)
    for (int n = 0; n <= a.max_q(); ++n) {
      long long d = (static_cast<long long>(n) + static_cast<long long>(t_qshift) * m) * q_stretch;
      if (d > a.max_q()) break;
      out.at(static_cast<int>(d), m) = a.at(n, m);
    }
  return out;
}

BiSeries apply_staircase(const BiSeries& a) {
  BiSeries out(a.max_q(), a.max_t());
  for (int m = 0; m <= a.max_t() && m * m <= a.max_q(); ++m)
    for (int n = 0; n + m * m <= a.max_q(); ++n) out.at(n + m * m, m) = a.at(n, m);
  return out;
}

BiSeries t_marginal(const BiSeries& a) {
  BiSeries out(a.max_q(), 0);
  for (int m = 0; m <= a.max_t(); ++m)
    for (int n = 0; n <= a.max_q(); ++n) out.at(n, 0) += a.at(n, m);
  return out;
}

Integer coeff(const BiSeries& a, int n, int m) { return a.coeff(n, m); }

nlohmann::json to_json(const BiSeries& a) {
  nlohmann::json terms = nlohmann::json::array();
  for (int m = 0; m <= a.max_t(); ++m)
    for (int n = 0; n <= a.max_q(); ++n)
      if (a.at(n, m) != 0) terms.push_back({m, n, a.at(n, m).str()});
  return {{"max_q", a.max_q()}, {"max_t", a.max_t()}, {"terms", terms}};
}

BiSeries series_from_json(const nlohmann::json& j) {
  try {
    BiSeries out(j.at("max_q").get<int>(), j.at("max_t").get<int>());
    for (const auto& term : j.at("terms")) {
      int dt = term.at(0).get<int>();
      int dq = term.at(1).get<int>();
      out.coeff(dq, dt);
      out.at(dq, dt) = Integer(term.at(2).get<std::string>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed series json: ") + e.what());
  }
}

}  // namespace qpart
