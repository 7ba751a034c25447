#include "qpartition/verify.hpp"

#include <map>
#include <set>
#include <string>

#include "qpartition/appendix.hpp"
#include "qpartition/error.hpp"
#include "qpartition/genfun.hpp"
#include "qpartition/moves.hpp"
#include "qpartition/ppoly.hpp"
#include "qpartition/seedgen.hpp"

namespace qpart {

namespace {

constexpr KrVariant kVariants[] = {KrVariant::D, KrVariant::DPrime, KrVariant::DPrimePrime};

std::string key(int m1, int m2, int m3, int s) {
  return "P(" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(m3) + "," +
         std::to_string(s) + ")";
}

std::string vname(KrVariant v) { return "KR" + std::to_string(variant_number(v)); }

void expect_equal(SuiteResult& r, const std::string& what, const BiSeries& a, const BiSeries& b) {
  auto rep = compare(a, b);
  if (rep.equal()) {
    r.notes.push_back(what + ": " + rep.to_string());
    return;
  }
  std::size_t shown = 0;
  for (const auto& x : rep.mismatches) {
    if (++shown > 10) break;
    r.fail(what + ": q^" + std::to_string(x.n) + " t^" + std::to_string(x.m) + " " + x.a.str() +
           " vs " + x.b.str());
  }
  if (rep.mismatches.size() > 10)
    r.fail(what + ": " + std::to_string(rep.mismatches.size()) + " mismatches in total");
}

int isqrt(int x) {
  int r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Runs body, turning internal assertion failures into suite failures.
template <class F>
void guarded(SuiteResult& r, const std::string& what, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.fail(what + ": " + e.what());
  }
}

}  // namespace

SuiteResult verify_appendix() {
  SuiteResult r{"appendix"};
  const auto& t = embedded_appendix();
  std::set<std::tuple<int, int, int, int>> listed;
  for (const auto& e : t.entries) {
    listed.insert({e.m1, e.m2, e.m3, e.s});
    QPoly rec = p(e.m1, e.m2, e.m3, e.s);
    const std::string k = key(e.m1, e.m2, e.m3, e.s);
    if (rec != e.expected()) {
      r.fail(k + ": recursion " + rec.to_string() + ", table " + e.expected().to_string());
      continue;
    }
    if (e.erratum) {
      QPoly oracle = p_oracle(e.m1, e.m2, e.m3, e.s, 0) + p_oracle(e.m1, e.m2, e.m3, e.s, 1);
      if (oracle != *e.erratum)
        r.fail(k + ": base enumeration gives " + oracle.to_string() + ", erratum says " +
               e.erratum->to_string());
      r.notes.push_back("misprint " + k + ": printed " + e.printed.to_string() +
                        "; recursion and base enumeration give " + rec.to_string());
    }
  }
  int zeros = 0;
  for (const auto& g : t.ranges) {
    for (int s = 0; s <= g.hi + 2; ++s) {
      if (s > g.lo && s < g.hi) {
        if (!listed.count({g.m1, g.m2, g.m3, s}))
          r.fail(key(g.m1, g.m2, g.m3, s) + ": inside the listed range but not transcribed");
        continue;
      }
      QPoly rec = p(g.m1, g.m2, g.m3, s);
      ++zeros;
      if (!rec.is_zero()) r.fail(key(g.m1, g.m2, g.m3, s) + ": expected 0, recursion " + rec.to_string());
    }
  }
  for (const auto& e : t.entries) {
    bool covered = false;
    for (const auto& g : t.ranges)
      if (g.m1 == e.m1 && g.m2 == e.m2 && g.m3 == e.m3 && e.s > g.lo && e.s < g.hi) covered = true;
    if (!covered) r.fail(key(e.m1, e.m2, e.m3, e.s) + ": entry outside its listed range");
  }
  r.notes.push_back(std::to_string(t.entries.size()) + " polynomials and " + std::to_string(zeros) +
                    " zero values checked");
  return r;
}

SuiteResult verify_examples() {
  SuiteResult r{"examples"};
  auto list = [](const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
  };
  guarded(r, "seed expansion", [&] {
    auto e = expand_seed(Partition::parse("3,5,8,11,13,19,21,23,25"), KrVariant::D);
    std::vector<std::string> want{
        "3,5,8,11,13,19,21,23,25", "3,5,8,11,13,20,20,24,24", "3,5,8,12,12,19,21,23,25",
        "3,5,8,12,12,20,20,24,24", "4,4,8,11,13,19,21,23,25", "4,4,8,11,13,20,20,24,24",
        "4,4,8,12,12,19,21,23,25", "4,4,8,12,12,20,20,24,24"};
    if (list(e.partitions) != want) r.fail("kr1 seed 3,5,8,11,13,19,21,23,25 does not give the 8 listed partitions");
    else r.notes.push_back("kr1 seed expands to the 8 listed partitions");
    if (to_seed(Partition::parse("4,4,8,11,13,19,21,23,25"), KrVariant::D).to_string() !=
        "3,5,8,11,13,19,21,23,25")
      r.fail("to_seed of 4,4,8,11,13,19,21,23,25");
  });
  guarded(r, "almost-seed expansion", [&] {
    auto s = to_seed(Partition::parse("2,2,6,12,12,16,18,24,24"), KrVariant::DPrime);
    if (s.to_string() != "1,3,6,11,13,16,18,23,25") r.fail("almost-seed of 2,2,6,12,12,16,18,24,24 is " + s.to_string());
    auto e = expand_seed(s, KrVariant::DPrime);
    std::vector<std::string> want{"2,2,6,11,13,16,18,23,25", "2,2,6,11,13,16,18,24,24",
                                  "2,2,6,12,12,16,18,23,25", "2,2,6,12,12,16,18,24,24"};
    if (list(e.partitions) != want) r.fail("kr2 almost-seed does not give the 4 listed partitions");
    else r.notes.push_back("kr2 almost-seed expands to the 4 listed partitions");
  });
  guarded(r, "decomposition", [&] {
    auto lambda = Partition::parse("1,4,4,5,6,6,9,10,11,12,12,14");
    std::vector<MoveEvent> trace;
    auto d = decompose(lambda, &trace);
    const bool ok = d.base.to_string() == "[1,2],[3,4],4,[6,6],[7,8],8,10,12" &&
                    d.mu.to_string() == "3,3,6,6" && d.theta.to_string() == "0,1,2,2" &&
                    d.base.parts().weight() == 71 && d.mu.weight() == 18 && d.theta.weight() == 5;
    if (!ok) r.fail("decomposition of " + lambda.to_string() + " gives " + to_json(d).dump());
    else r.notes.push_back("94 = 71 + 18 + 5 with the listed base, mu and theta");
    int pair_moves = 0;
    for (const auto& ev : trace) pair_moves += ev.op == "backward";
    if (pair_moves * 3 != d.mu.weight()) r.fail("trace has " + std::to_string(pair_moves) + " backward moves");
    if (compose(d) != lambda) r.fail("compose does not invert the decomposition");
  });
  guarded(r, "composition", [&] {
    Decomposition d;
    d.base = TaggedPartition::parse("[2,2],[3,4],4,[6,6],[7,8],8,[10,10],11,13,15");
    d.mu = Partition::parse("3,3,3,6,6", Zeros::Allowed);
    d.theta = Partition::parse("0,0,2,3,5", Zeros::Allowed);
    d.n2 = 5;
    d.n11 = 2;
    d.n12 = 3;
    std::vector<MoveEvent> trace;
    auto lambda = compose(d, &trace);
    if (lambda.to_string() != "2,4,4,5,6,6,8,8,9,12,12,14,14,16,20" || lambda.weight() != 140)
      r.fail("composition gives " + lambda.to_string());
    else r.notes.push_back("140 = 109 + 21 + 10 composes to 2,4,4,5,6,6,8,8,9,12,12,14,14,16,20");
    if (!(decompose(lambda) == d)) r.fail("decompose does not invert the composition");
  });
  return r;
}

SuiteResult verify_products(int max_q) {
  SuiteResult r{"products"};
  const int Q = max_q > 0 ? max_q : 60;
  guarded(r, "products", [&] {
    for (auto v : kVariants)
      expect_equal(r, vname(v) + " t=1 vs product", t_marginal(kr_alternating(v, Q, isqrt(Q))),
                   product_side(v, Q));
    expect_equal(r, "KR2 product displays", product_side(KrVariant::DPrime, Q),
                 product_side(KrVariant::DPrime, Q, ProductDisplay::Alternate));
  });
  return r;
}

SuiteResult verify_forms(int max_q, int max_t) {
  SuiteResult r{"forms"};
  const int Q = max_q > 0 ? max_q : 30;
  const int T = max_t > 0 ? max_t : 10;
  guarded(r, "forms", [&] {
    for (auto v : kVariants) {
      auto brute = kr_brute(v, std::max(Q, 40), std::max(T, 12));
      auto alt = kr_alternating(v, std::max(Q, 40), std::max(T, 12));
      expect_equal(r, vname(v) + " alternating vs brute", alt, brute);
      expect_equal(r, vname(v) + " positive vs brute", kr_positive(v, Q, T), truncate(brute, Q, T));
    }
    expect_equal(r, "KR3 vs KR2 with t -> tq^2", kr_alternating(KrVariant::DPrimePrime, Q, T),
                 substitute_scale(kr_alternating(KrVariant::DPrime, Q, T), 2, 1));
  });
  return r;
}

SuiteResult verify_corollary(int max_q, int max_t) {
  SuiteResult r{"corollary"};
  const int Q = max_q > 0 ? max_q : 40;
  const int T = max_t > 0 ? max_t : 12;
  guarded(r, "corollary", [&] {
    auto prod = h_product(Q, T);
    expect_equal(r, "h positive vs product", h_positive(Q, T), prod);
    expect_equal(r, "h brute vs product", h_brute(Q, T), prod);
  });
  return r;
}

SuiteResult verify_closed_forms() {
  SuiteResult r{"closed-forms"};
  int checked = 0;
  guarded(r, "closed forms", [&] {
    for (int a = 0; a <= 6; ++a)
      for (int m3 = 0; m3 <= 3; ++m3) {
        std::vector<std::pair<ClosedFormKind, ClosedFormParams>> keys;
        for (int s = 1; s <= 2 * a + 4 * m3 + 3; ++s) {
          if (m3 == 0) {
            keys.push_back({ClosedFormKind::PX00, {a, 0, 0, s}});
            keys.push_back({ClosedFormKind::P0X0, {0, a, 0, s}});
          }
          if (a == 0) keys.push_back({ClosedFormKind::P00X, {0, 0, m3, s}});
        }
        keys.push_back({ClosedFormKind::PX0X, {a, 0, m3, a + 4 * m3 + 1}});
        keys.push_back({ClosedFormKind::P0XX, {0, a, m3, a + 4 * m3 + 1}});
        for (const auto& [kind, c] : keys) {
          if (!in_shape(kind, c)) continue;
          ++checked;
          QPoly cf = closed_form(kind, c);
          QPoly rec = p(c.m1, c.m2, c.m3, c.s);
          if (cf != rec)
            r.fail(to_string(kind) + " at " + key(c.m1, c.m2, c.m3, c.s) + ": closed form " +
                   cf.to_string() + ", recursion " + rec.to_string());
        }
      }
    r.notes.push_back(std::to_string(checked) + " in-shape keys agree with the recursion");
    auto disc = printed_exponent_discrepancies(6, 3);
    r.notes.push_back("printed m3 exponent disagrees with the recursion at " +
                      std::to_string(disc.size()) + " keys:");
    for (const auto& d : disc) {
      auto lead = [](const QPoly& q) {
        return q.is_zero() ? std::string("0") : "q^" + std::to_string(*q.low_degree()) + " ...";
      };
      r.notes.push_back("  " + to_string(d.kind) + " " + key(d.params.m1, d.params.m2, d.params.m3, d.params.s) +
                        ": printed starts " + lead(d.printed) + ", recursion starts " + lead(d.recursion));
    }
  });
  return r;
}

SuiteResult verify_oracle() {
  SuiteResult r{"oracle"};
  int keys = 0;
  guarded(r, "oracle", [&] {
    for (int m3 = 0; 2 * m3 <= 5; ++m3)
      for (int m1 = 0; m1 + 2 * m3 <= 5; ++m1)
        for (int m2 = 0; m1 + m2 + 2 * m3 <= 5; ++m2)
          for (int s = 0; s <= 14; ++s)
            for (int par = 0; par <= 1; ++par) {
              ++keys;
              QPoly rec = p_parity({m1, m2, m3, s, par});
              QPoly orc = p_oracle(m1, m2, m3, s, par);
              if (rec != orc)
                r.fail("P" + std::to_string(par) + key(m1, m2, m3, s).substr(1) + ": recursion " +
                       rec.to_string() + ", bases " + orc.to_string());
            }
    r.notes.push_back(std::to_string(keys) + " keys with m1+m2+2m3 <= 5, s <= 14 agree");
    int stray = 0, structures = 0;
    for (int n2 = 1; n2 <= 3; ++n2)
      for (const auto& b : enumerate_blocked_structures(n2, n2, std::nullopt)) {
        ++structures;
        if (b.stray) {
          ++stray;
          r.notes.push_back("immobile singleton outside a block: " + b.structure.to_string());
        }
      }
    r.notes.push_back(std::to_string(structures) + " blocked structures with up to 3 pairs: " +
                      std::to_string(stray) + " with a singleton outside a block");
  });
  return r;
}

SuiteResult verify_bijection(int max_n) {
  SuiteResult r{"bijection"};
  const int N = max_n > 0 ? max_n : 25;
  guarded(r, "bijection", [&] {
    int checked = 0;
    for (int n = 0; n <= N; ++n)
      for (const auto& lam : enumerate(n, std::nullopt, at_most_twice_predicate())) {
        ++checked;
        auto d = decompose(lam);
        const std::string where = " for " + lam.to_string();
        if (d.base.parts().weight() + d.mu.weight() + d.theta.weight() != n) r.fail("weight" + where);
        for (int x : d.mu.parts())
          if (x % 3) r.fail("mu not multiples of 3" + where);
        for (int j = 0; j < d.n11; ++j)
          if (d.theta[j] != 0) r.fail("theta head not zero" + where);
        if (compose(d) != lam) r.fail("round trip" + where);
      }
    r.notes.push_back(std::to_string(checked) + " partitions round-trip");

    // count triples (base, mu, theta) by (n, m) and compare with h(n, m)
    BiSeries count(N, N);
    int triples = 0;
    for (int n2 = 0; n2 * (n2 + 1) <= N; ++n2)
      for (const auto& b : enumerate_blocked_structures(n2, n2, N)) {
        const int n11 = b.structure.pair_count() ? static_cast<int>(b.structure.items().size()) - n2 : 0;
        const int k = b.largest_pair;
        for (int n12 = 0; b.weight + n12 * k + n12 * n12 <= N; ++n12) {
          std::vector<Item> items(b.structure.items().begin(), b.structure.items().end());
          for (int j = 0; j < n12; ++j) items.push_back({ItemKind::Singleton, k + 2 * j + 1});
          std::vector<int> flat;
          for (const auto& it : items) {
            flat.push_back(it.low);
            if (it.is_pair()) flat.push_back(it.high());
          }
          Decomposition d;
          d.base = TaggedPartition::tag(Partition(flat));
          d.base.classify_singletons();
          d.n2 = n2;
          d.n11 = n11;
          d.n12 = n12;
          const int w0 = d.base.parts().weight();
          const int room = N - w0;
          for_each_partition(room / 3, n2, [&](std::span<const int> mu3) {
            std::vector<int> mu(n2 - mu3.size(), 0);
            for (int x : mu3) mu.push_back(3 * x);
            int wmu = 0;
            for (int x : mu) wmu += x;
            for_each_partition(room - wmu, n12, [&](std::span<const int> th) {
              std::vector<int> theta(n11 + n12 - th.size(), 0);
              theta.insert(theta.end(), th.begin(), th.end());
              d.mu = Partition(mu, Zeros::Allowed);
              d.theta = Partition(theta, Zeros::Allowed);
              ++triples;
              auto lam = compose(d);
              count.at(lam.weight(), 2 * n2 + n11 + n12) += 1;
              if (!(decompose(lam) == d)) r.fail("decompose(compose(d)) != d for " + lam.to_string());
            });
          });
        }
      }
    expect_equal(r, "triple count vs h(n,m)", count, h_brute(N, N));
    r.notes.push_back(std::to_string(triples) + " triples checked");
  });
  return r;
}

SuiteResult verify_positivity(int max_q, int max_t) {
  SuiteResult r{"positivity"};
  const int Q = max_q > 0 ? max_q : 30;
  const int T = max_t > 0 ? max_t : 10;
  guarded(r, "positivity", [&] {
    for (auto v : kVariants) {
      if (auto neg = first_negative(kr_positive(v, Q, T))) r.fail(vname(v) + " positive form negative");
      if (auto neg = first_negative(kr_alternating(v, std::max(Q, 40), std::max(T, 12))))
        r.fail(vname(v) + " alternating form negative after summation");
    }
    if (first_negative(h_positive(std::max(Q, 40), std::max(T, 12)))) r.fail("h positive form negative");
    int polys = 0;
    for (int m1 = 0; m1 <= 6; ++m1)
      for (int m2 = 0; m2 <= 6; ++m2)
        for (int m3 = 0; m3 <= 3; ++m3) {
          auto [lo, hi] = p_support(m1, m2, m3);
          for (int s = 0; s <= hi + 1; ++s) {
            QPoly q = p(m1, m2, m3, s);
            ++polys;
            if (!is_nonnegative(q)) r.fail(key(m1, m2, m3, s) + " has a negative coefficient");
            if ((s < lo || s > hi) && !q.is_zero()) r.fail(key(m1, m2, m3, s) + " outside the support window");
          }
        }
    r.notes.push_back(std::to_string(polys) + " P polynomials nonnegative; positive and alternating forms nonnegative");
  });
  return r;
}

std::vector<std::string> suite_names() {
  return {"appendix", "examples", "products", "forms", "corollary", "closed-forms", "oracle", "bijection", "positivity"};
}

SuiteResult run_suite(const std::string& name, int max_q) {
  if (name == "appendix") return verify_appendix();
  if (name == "examples") return verify_examples();
  if (name == "products") return verify_products(max_q);
  if (name == "forms") return verify_forms(max_q);
  if (name == "corollary") return verify_corollary(max_q);
  if (name == "closed-forms") return verify_closed_forms();
  if (name == "oracle") return verify_oracle();
  if (name == "bijection") return verify_bijection(max_q);
  if (name == "positivity") return verify_positivity(max_q);
  throw InvalidInput("unknown suite " + name);
}

}  // namespace qpart
