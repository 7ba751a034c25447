#include "qpartition/genfun.hpp"

#include <algorithm>
#include <string>

#include "qpartition/error.hpp"
#include "qpartition/ppoly.hpp"

namespace qpart {

namespace {

void require_nonnegative(const BiSeries& s, const char* what) {
  if (auto neg = first_negative(s))
    throw std::logic_error(std::string(what) + " produced a negative coefficient at q^" +
                           std::to_string(neg->first) + " t^" + std::to_string(neg->second));
}

// 1/(q^b; q^b)_n for n = 0..count, univariate.
std::vector<BiSeries> inverse_pochhammers(int base, int count, int max_q) {
  std::vector<BiSeries> out{one(max_q, 0)};
  for (int n = 1; n <= count; ++n) {
    BiSeries next = out.back();
    if (base * n <= max_q) next = mul_geometric_inverse(next, 0, base * n);
    out.push_back(std::move(next));
  }
  return out;
}

// out += sign * q^dq t^dt * u, u univariate.
void add_row(BiSeries& out, const BiSeries& u, int dq, int dt, int sign = 1) {
  if (dt > out.max_t()) return;
  auto row = out.row(dt);
  for (int n = 0; n + dq <= out.max_q() && n <= u.max_q(); ++n) {
    if (u.at(n, 0) == 0) continue;
    if (sign > 0)
      row[n + dq] += u.at(n, 0);
    else
      row[n + dq] -= u.at(n, 0);
  }
}

int isqrt(int x) {
  int r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

Variant to_variant(KrVariant v) {
  switch (v) {
    case KrVariant::D: return Variant::KR1;
    case KrVariant::DPrime: return Variant::KR2;
    case KrVariant::DPrimePrime: return Variant::KR3;
  }
  return Variant::KR1;
}

KrVariant to_kr_variant(Variant v) {
  switch (v) {
    case Variant::KR1: return KrVariant::D;
    case Variant::KR2: return KrVariant::DPrime;
    case Variant::KR3: return KrVariant::DPrimePrime;
    case Variant::H: break;
  }
  throw InvalidInput("H is not a kr variant");
}

Form parse_form(const std::string& name) {
  if (name == "brute") return Form::Brute;
  if (name == "alternating") return Form::Alternating;
  if (name == "positive") return Form::Positive;
  if (name == "product") return Form::Product;
  throw InvalidInput("unknown form " + name);
}

BiSeries kr_brute(KrVariant v, int max_q, int max_t) {
  return brute_series(kr_predicate(v), max_q, max_t);
}

BiSeries kr_alternating(KrVariant v, int max_q, int max_t) {
  // Sum before the staircase q^{s^2} on t^s, s = i + 2j + 3k.
  const int smax = std::min(max_t, isqrt(max_q));
  auto d1 = inverse_pochhammers(1, smax, max_q);
  auto d4 = inverse_pochhammers(4, smax / 2, max_q);
  auto d6 = inverse_pochhammers(6, smax / 3, max_q);
  BiSeries pre(max_q, max_t);
  for (int k = 0; 3 * k <= smax; ++k)
    for (int j = 0; 2 * j + 3 * k <= smax; ++j)
      for (int i = 0; i + 2 * j + 3 * k <= smax; ++i) {
        int e = 0;
        switch (v) {
          case KrVariant::D: e = 4 * j + 3 * k * k + 3 * k; break;
          case KrVariant::DPrime: e = i + 3 * k * k + 3 * k; break;
          case KrVariant::DPrimePrime: e = 3 * i + 4 * j + 3 * k * k + 9 * k; break;
        }
        if (e > max_q) continue;
        add_row(pre, d1[i] * d4[j] * d6[k], e, i + 2 * j + 3 * k, k % 2 ? -1 : 1);
      }
  BiSeries out = apply_staircase(pre);
  require_nonnegative(out, "alternating sum");
  return out;
}

namespace {

// The pair/block part of the positive sums, before the staircase:
// sum P(m1,m2,m3,m+1; q^stretch) q^{stretch(m n12 + n12^2) + extra*A} t^A
//   / ((q^stretch; q^stretch)_n12 (q^{3 stretch}; q^{3 stretch})_{m1+m2+2m3}),
// A = 2m1 + 2m2 + 5m3 + n12. With stretch = 1, extra = 0 this is the
// at-most-twice series before the staircase.
BiSeries pair_block_part(int stretch, int extra, int max_q, int max_t, bool staircase_bound) {
  BiSeries out(max_q, max_t);
  auto fits = [&](int a) { return a <= max_t && (!staircase_bound || a * a <= max_q); };
  for (int m3 = 0; fits(5 * m3); ++m3)
    for (int m1 = 0; fits(2 * m1 + 5 * m3); ++m1)
      for (int m2 = 0; fits(2 * m1 + 2 * m2 + 5 * m3); ++m2) {
        auto [lo, hi] = p_support(m1, m2, m3);
        if (!p(m1, m2, m3, lo - 1).is_zero() || !p(m1, m2, m3, hi + 1).is_zero())
          throw std::logic_error("P support window guard failed");
        const int pairs = m1 + m2 + 2 * m3;
        BiSeries dpairs = inv_finite_pochhammer(0, 3 * stretch, 3 * stretch, pairs, max_q, 0);
        for (int s = lo; s <= hi; ++s) {
          QPoly pq = p(m1, m2, m3, s);
          if (pq.is_zero()) continue;
          if (!is_nonnegative(pq)) throw std::logic_error("P polynomial with a negative coefficient");
          if (*pq.low_degree() * stretch > max_q) continue;
          BiSeries pser(max_q, 0);
          for (int d = 0; d < static_cast<int>(pq.coeffs().size()) && d * stretch <= max_q; ++d)
            pser.at(d * stretch, 0) = pq.coeffs()[d];
          BiSeries base = pser * dpairs;
          const int m = s - 1;
          BiSeries dn12 = one(max_q, 0);
          for (int n12 = 0;; ++n12) {
            const int a = 2 * m1 + 2 * m2 + 5 * m3 + n12;
            if (!fits(a)) break;
            const long long e =
                static_cast<long long>(stretch) * (m * n12 + n12 * n12) + static_cast<long long>(extra) * a;
            if (e > max_q) break;
            if (n12 > 0 && stretch * n12 <= max_q) dn12 = mul_geometric_inverse(dn12, 0, stretch * n12);
            BiSeries term = base * dn12;
            require_nonnegative(term, "positive sum term");
            add_row(out, term, static_cast<int>(e), a);
          }
        }
      }
  return out;
}

// sum q^{ci i + cj j} t^{i + 2j + k} / ((q^2;q^2)_i (q^4;q^4)_j), k only if with_k
BiSeries tail_part(int ci, int cj, bool with_k, int max_q, int max_t) {
  const int bmax = std::min(max_t, isqrt(max_q));
  auto d2 = inverse_pochhammers(2, bmax, max_q);
  auto d4 = inverse_pochhammers(4, bmax / 2, max_q);
  BiSeries out(max_q, max_t);
  for (int j = 0; 2 * j <= bmax; ++j)
    for (int i = 0; i + 2 * j <= bmax; ++i) {
      const int e = ci * i + cj * j;
      if (e > max_q) continue;
      BiSeries term = d2[i] * d4[j];
      require_nonnegative(term, "positive sum term");
      for (int k = 0; i + 2 * j + k <= bmax; ++k) {
        add_row(out, term, e, i + 2 * j + k);
        if (!with_k) break;
      }
    }
  return out;
}

}  // namespace

BiSeries kr_positive(KrVariant v, int max_q, int max_t) {
  BiSeries outer(max_q, max_t), inner(max_q, max_t);
  switch (v) {
    case KrVariant::D:
      outer = pair_block_part(2, 0, max_q, max_t, true);
      inner = tail_part(1, 4, true, max_q, max_t);
      break;
    case KrVariant::DPrime:
      outer = pair_block_part(2, 0, max_q, max_t, true);
      inner = tail_part(1, 0, false, max_q, max_t);
      break;
    case KrVariant::DPrimePrime:
      outer = pair_block_part(2, 2, max_q, max_t, true);
      inner = tail_part(3, 4, false, max_q, max_t);
      break;
  }
  BiSeries out = apply_staircase(outer * inner);
  require_nonnegative(out, "positive sum");
  return out;
}

BiSeries h_brute(int max_q, int max_t) { return brute_series(at_most_twice_predicate(), max_q, max_t); }

BiSeries h_product(int max_q, int max_t) {
  BiSeries s = one(max_q, max_t);
  for (int n = 1; n <= max_q; ++n) {
    BiSeries f = s + mul_monomial(s, 1, n, 1);
    if (2 * n <= max_q) f += mul_monomial(s, 1, 2 * n, 2);
    s = std::move(f);
  }
  return s;
}

BiSeries h_positive(int max_q, int max_t) {
  // the staircase here is n12^2 on the singleton count only, already in the exponent
  BiSeries out = pair_block_part(1, 0, max_q, max_t, false);
  require_nonnegative(out, "h positive sum");
  return out;
}

BiSeries product_side(KrVariant v, int max_q, ProductDisplay display) {
  BiSeries s = one(max_q, 0);
  auto divide = [&](std::initializer_list<int> residues, int modulus) {
    for (int r : residues) s = s * inv_pochhammer(0, r, modulus, max_q, 0);
  };
  switch (v) {
    case KrVariant::D:
      divide({1, 4, 6, 8, 11}, 12);
      break;
    case KrVariant::DPrime:
      s = neg_pochhammer_alternating(0, 6, 12, max_q, 0);
      if (display == ProductDisplay::Primary)
        divide({2, 3, 4, 8, 9, 10}, 12);
      else
        divide({2, 3, 4}, 6);
      break;
    case KrVariant::DPrimePrime:
      divide({4, 5, 6, 7, 8}, 12);
      break;
  }
  return s;
}

BiSeries evaluate(const GenFunSpec& spec) {
  if (spec.variant == Variant::H) {
    switch (spec.form) {
      case Form::Brute: return h_brute(spec.max_q, spec.max_t);
      case Form::Positive: return h_positive(spec.max_q, spec.max_t);
      case Form::Product: return h_product(spec.max_q, spec.max_t);
      case Form::Alternating: break;
    }
    throw InvalidInput("H has no alternating form");
  }
  const KrVariant v = to_kr_variant(spec.variant);
  switch (spec.form) {
    case Form::Brute: return kr_brute(v, spec.max_q, spec.max_t);
    case Form::Alternating: return kr_alternating(v, spec.max_q, spec.max_t);
    case Form::Positive: return kr_positive(v, spec.max_q, spec.max_t);
    case Form::Product: return product_side(v, spec.max_q);
  }
  return BiSeries(0, 0);
}

ComparisonReport compare(const BiSeries& a, const BiSeries& b) {
  ComparisonReport r;
  r.max_q = std::min(a.max_q(), b.max_q());
  r.max_t = std::min(a.max_t(), b.max_t());
  for (int n = 0; n <= r.max_q; ++n)
    for (int m = 0; m <= r.max_t; ++m)
      if (a.at(n, m) != b.at(n, m)) r.mismatches.push_back({n, m, a.at(n, m), b.at(n, m)});
  return r;
}

std::string ComparisonReport::to_string() const {
  std::string out;
  if (equal())
    return "equal on q <= " + std::to_string(max_q) + ", t <= " + std::to_string(max_t);
  for (const auto& x : mismatches)
    out += "q^" + std::to_string(x.n) + " t^" + std::to_string(x.m) + ": " + x.a.str() + " vs " +
           x.b.str() + "\n";
  return out;
}

std::optional<std::pair<int, int>> first_negative(const BiSeries& a) {
  for (int n = 0; n <= a.max_q(); ++n)
    for (int m = 0; m <= a.max_t(); ++m)
      if (a.at(n, m) < 0) return std::pair{n, m};
  return std::nullopt;
}

}  // namespace qpart
