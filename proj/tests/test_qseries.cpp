#include <doctest.h>

#include "qpartition/biseries.hpp"
#include "qpartition/error.hpp"
#include "qpartition/partition.hpp"
#include "qpartition/qpoly.hpp"

using namespace qpart;

namespace {

Integer tsum(const BiSeries& a, int n) {
  Integer s = 0;
  for (int m = 0; m <= a.max_t(); ++m) s += a.at(n, m);
  return s;
}

}  // namespace

TEST_CASE("monomials") {
  auto c = make_monomial(1, 0, 0, 10, 5);
  CHECK(c == one(10, 5));
  auto m = make_monomial(-1, 6, 3, 20, 5);
  CHECK(coeff(m, 6, 3) == -1);
  CHECK(coeff(m, 5, 3) == 0);
  auto d = make_monomial(2, 4, 2, 10, 4);
  CHECK(coeff(d + d, 4, 2) == 4);
  CHECK_THROWS_AS(make_monomial(1, 11, 0, 10, 4), InvalidInput);
  CHECK_THROWS_AS(make_monomial(1, 0, -1, 10, 4), InvalidInput);
}

TEST_CASE("add and mul") {
  const int Q = 12, T = 4;
  auto tq = make_monomial(1, 1, 1, Q, T);
  auto x = one(Q, T) + tq;
  CHECK((x + BiSeries(Q, T)) == x);
  CHECK(coeff(tq + tq, 1, 1) == 2);
  CHECK((x + scale(x, -1)).is_zero());

  auto sq = x * x;
  CHECK(coeff(sq, 0, 0) == 1);
  CHECK(coeff(sq, 1, 1) == 2);
  CHECK(coeff(sq, 2, 2) == 1);
  CHECK((x * BiSeries(Q, T)).is_zero());

  BiSeries geo(Q, 0);
  for (int n = 0; n <= Q; ++n) geo.at(n, 0) = 1;
  auto oneq = one(Q, 0) - make_monomial(1, 1, 0, Q, 0);
  CHECK(oneq * geo == one(Q, 0));
}

TEST_CASE("mixed windows shrink") {
  auto a = one(10, 3);
  auto b = one(6, 5);
  auto s = a + b;
  CHECK(s.max_q() == 6);
  CHECK(s.max_t() == 3);
  CHECK(coeff(s, 0, 0) == 2);
  auto p = a * b;
  CHECK(p.max_q() == 6);
  CHECK(p.max_t() == 3);
}

TEST_CASE("mul_geometric_inverse") {
  auto g = mul_geometric_inverse(one(8, 6), 1, 0);
  for (int m = 0; m <= 6; ++m) {
    CHECK(coeff(g, 0, m) == 1);
    CHECK(coeff(g, 1, m) == 0);
  }
  auto h = mul_geometric_inverse(one(8, 0), 0, 1);
  for (int n = 0; n <= 8; ++n) CHECK(coeff(h, n, 0) == 1);
  auto f = one(8, 6) - make_monomial(1, 1, 1, 8, 6);
  CHECK(mul_geometric_inverse(f, 1, 1) == one(8, 6));
  CHECK_THROWS_AS(mul_geometric_inverse(one(8, 6), 0, 0), InvalidInput);
}

TEST_CASE("inv_pochhammer") {
  auto p = inv_pochhammer(0, 1, 1, 20, 0);
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(coeff(p, n, 0) == counts[n]);
  auto all = brute_series([](std::span<const int>) { return true; }, 20, 20);
  for (int n = 0; n <= 20; ++n) CHECK(coeff(p, n, 0) == tsum(all, n));

  auto odd = inv_pochhammer(1, 1, 2, 15, 3);
  for (int n = 0; n <= 15; ++n) CHECK(coeff(odd, n, 1) == (n % 2 == 1 ? 1 : 0));

  // 1/(t^2 q^4; q^4): pairs of parts that are multiples of 4, counted with t^2 each
  auto f = inv_pochhammer(2, 4, 4, 24, 6);
  auto oracle = brute_series(
      [](std::span<const int> ps) {
        for (int x : ps)
          if (x % 4 != 0) return false;
        return true;
      },
      24, 3);
  for (int n = 0; n <= 24; ++n)
    for (int m = 0; m <= 3; ++m) CHECK(coeff(f, n, 2 * m) == coeff(oracle, n, m));
  for (int n = 0; n <= 24; ++n) CHECK(coeff(f, n, 1) == 0);

  CHECK_THROWS_AS(inv_pochhammer(0, 0, 1, 10, 2), InvalidInput);
  CHECK_THROWS_AS(inv_pochhammer(1, 0, 0, 10, 2), InvalidInput);
}

TEST_CASE("Euler sums equal products") {
  const int Q = 30, T = 8;
  struct X {
    int dt, dq, base;
  };
  for (X x : {X{0, 1, 1}, X{1, 1, 2}, X{2, 4, 4}, X{3, 6, 6}, X{1, 0, 1}, X{0, 2, 3}, X{1, 2, 1}}) {
    auto direct_inv = one(Q, T);
    auto direct = one(Q, T);
    for (int n = 0; x.dq + x.base * n <= Q; ++n) {
      direct_inv = mul_geometric_inverse(direct_inv, x.dt, x.dq + x.base * n);
      direct = mul_binomial_factor(direct, x.dt, x.dq + x.base * n);
    }
    auto inv = inv_pochhammer(x.dt, x.dq, x.base, Q, T);
    auto neg = neg_pochhammer_alternating(x.dt, x.dq, x.base, Q, T);
    CHECK(inv == direct_inv);
    CHECK(neg == direct);
    CHECK(inv * neg == one(Q, T));
  }
}

TEST_CASE("neg_pochhammer_alternating") {
  auto a = neg_pochhammer_alternating(3, 6, 6, 40, 9);
  CHECK(coeff(a, 0, 0) == 1);
  CHECK(coeff(a, 6, 3) == -1);
  // two factors q^6 * q^12, so the sign is positive
  CHECK(coeff(a, 18, 6) == 1);
  CHECK(coeff(a, 18, 3) == -1);
  auto e = neg_pochhammer_alternating(0, 1, 1, 26, 0);
  // pentagonal numbers 0,1,2,5,7,12,15,22,26
  const int nz[] = {0, 1, 2, 5, 7, 12, 15, 22, 26};
  const int sg[] = {1, -1, -1, 1, 1, -1, -1, 1, 1};
  int k = 0;
  for (int n = 0; n <= 26; ++n) {
    if (k < 9 && nz[k] == n) {
      CHECK(coeff(e, n, 0) == sg[k]);
      ++k;
    } else {
      CHECK(coeff(e, n, 0) == 0);
    }
  }
  CHECK(neg_pochhammer_alternating(1, 11, 1, 10, 3) == one(10, 3));
}

TEST_CASE("finite_pochhammer") {
  CHECK(finite_pochhammer(0, 1, 1, 0, 10, 0) == one(10, 0));
  auto p2 = finite_pochhammer(0, 1, 1, 2, 10, 0);
  CHECK(coeff(p2, 0, 0) == 1);
  CHECK(coeff(p2, 1, 0) == -1);
  CHECK(coeff(p2, 2, 0) == -1);
  CHECK(coeff(p2, 3, 0) == 1);
  CHECK(coeff(p2, 4, 0) == 0);
  auto inc = finite_pochhammer(0, 1, 1, 1, 10, 0, PochhammerConvention::Inclusive);
  CHECK(inc == p2);
  auto d = inv_finite_pochhammer(0, 1, 1, 1, 10, 0);
  for (int n = 0; n <= 10; ++n) CHECK(coeff(d, n, 0) == 1);
  CHECK(inv_finite_pochhammer(0, 1, 1, 4, 10, 0) * finite_pochhammer(0, 1, 1, 4, 10, 0) ==
        one(10, 0));
}

TEST_CASE("substitute_scale") {
  auto a = inv_pochhammer(1, 1, 1, 20, 5);
  CHECK(substitute_scale(a, 0, 1) == a);
  auto b = substitute_scale(a, 2, 1);
  for (int n = 0; n <= 20; ++n)
    for (int m = 0; m <= 5; ++m)
      CHECK(coeff(b, n, m) == (n - 2 * m >= 0 ? coeff(a, n - 2 * m, m) : Integer(0)));
  auto c = substitute_scale(a, 0, 2);
  for (int n = 0; n <= 20; ++n)
    for (int m = 0; m <= 5; ++m)
      CHECK(coeff(c, n, m) == (n % 2 == 0 ? coeff(a, n / 2, m) : Integer(0)));
  CHECK_THROWS_AS(substitute_scale(a, -1, 1), InvalidInput);
  CHECK_THROWS_AS(substitute_scale(a, 0, 0), InvalidInput);
}

TEST_CASE("algebra laws on equal windows") {
  const int Q = 14, T = 4;
  auto a = inv_pochhammer(1, 1, 2, Q, T);
  auto b = neg_pochhammer_alternating(1, 2, 1, Q, T) + make_monomial(3, 2, 1, Q, T);
  auto c = inv_pochhammer(2, 1, 3, Q, T);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("coeff") {
  auto a = one(4, 2) + make_monomial(2, 1, 1, 4, 2);
  CHECK(coeff(a, 1, 1) == 2);
  CHECK(coeff(BiSeries(6, 3), 5, 2) == 0);
  CHECK_THROWS_AS(coeff(a, 5, 0), InvalidInput);
  CHECK_THROWS_AS(coeff(a, 0, 3), InvalidInput);
  auto all = brute_series([](std::span<const int>) { return true; }, 6, 6);
  CHECK(tsum(all, 4) == 5);
}

TEST_CASE("json round trip") {
  auto a = neg_pochhammer_alternating(1, 1, 1, 30, 6);
  auto big = scale(a, Integer("123456789012345678901234567890"));
  auto j = to_json(big);
  CHECK(j["max_q"] == 30);
  CHECK(j["max_t"] == 6);
  CHECK(series_from_json(j) == big);
  auto k = to_json(make_monomial(-7, 3, 2, 5, 4));
  CHECK(k["terms"].size() == 1);
  CHECK(k["terms"][0][0] == 2);
  CHECK(k["terms"][0][1] == 3);
  CHECK(k["terms"][0][2] == "-7");
}

TEST_CASE("qpoly basics") {
  auto p = QPoly::parse("q^30+2q^28+2q^26+2q^24");
  CHECK(p.degree() == 30);
  CHECK(p.low_degree() == 24);
  CHECK(p[28] == 2);
  CHECK(p.to_string() == "q^30 + 2q^28 + 2q^26 + 2q^24");
  CHECK(QPoly().to_string() == "0");
  CHECK(!QPoly().degree().has_value());
  CHECK(QPoly::parse("1").to_string() == "1");
  CHECK(QPoly::parse("q").to_string() == "q");
  CHECK(QPoly::parse("3q+2").to_string() == "3q + 2");
  CHECK((QPoly::parse("1+q") * QPoly::parse("1-q")) == QPoly::parse("1-q^2"));
  CHECK(shift(QPoly::one(), 7) == QPoly::parse("q^7"));
  CHECK(stretch(QPoly::parse("1+q"), 3) == QPoly::parse("1+q^3"));
  CHECK((QPoly::parse("q") + QPoly::parse("-q")).is_zero());
}

TEST_CASE("qbinomial") {
  CHECK(qbinomial(2, 1, 2) == QPoly::parse("1+q^2"));
  for (int m = 0; m < 6; ++m) CHECK(qbinomial(m, 0, 3) == QPoly::one());
  CHECK(qbinomial(4, 2, 1) == QPoly::parse("1+q+2q^2+q^3+q^4"));
  CHECK(qbinomial(-1, 0, 1).is_zero());
  CHECK(qbinomial(3, -1, 1).is_zero());
  CHECK(qbinomial(3, 4, 1).is_zero());
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= n; ++k)
      for (int c = 1; c <= 3; ++c) {
        CHECK(qbinomial(n, k, c) ==
              shift(qbinomial(n - 1, k, c), k * c) + qbinomial(n - 1, k - 1, c));
        CHECK(qbinomial(n, k, c).degree() == k * (n - k) * c);
      }
}
