#include <doctest.h>

#include <set>

#include "qpartition/error.hpp"
#include "qpartition/partition.hpp"
#include "qpartition/seedgen.hpp"

using namespace qpart;

namespace {

std::vector<std::string> strings(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Sum over partitions of n into m parts >= 0 of a^e, e = number of distinct
// non-zero even values with even multiplicity.
BiSeries weighted_oracle(int a, bool even_zeros, int max_q, int max_t) {
  BiSeries out(max_q, max_t);
  for_each_partition(max_q, max_t, [&](std::span<const int> ps) {
    int e = 0;
    for (std::size_t i = 0; i < ps.size();) {
      std::size_t j = i;
      while (j < ps.size() && ps[j] == ps[i]) ++j;
      if (ps[i] % 2 == 0 && (j - i) % 2 == 0) ++e;
      i = j;
    }
    Integer w = 1;
    for (int k = 0; k < e; ++k) w *= a;
    int n = 0;
    for (int x : ps) n += x;
    for (int zeros = 0; ps.size() + zeros <= static_cast<std::size_t>(max_t); ++zeros) {
      if (even_zeros && zeros % 2) continue;
      out.at(n, static_cast<int>(ps.size()) + zeros) += w;
    }
  });
  return out;
}

}  // namespace

TEST_CASE("to_seed") {
  CHECK(to_seed(Partition::parse("4,4,8,11,13,19,21,23,25"), KrVariant::D).to_string() ==
        "3,5,8,11,13,19,21,23,25");
  CHECK(to_seed(Partition::parse("2,2,6,12,12,16,18,24,24"), KrVariant::DPrime).to_string() ==
        "1,3,6,11,13,16,18,23,25");
  auto fixed = Partition::parse("1,3,6,10");
  CHECK(to_seed(fixed, KrVariant::D) == fixed);
  CHECK_THROWS_AS(to_seed(Partition::parse("2,2"), KrVariant::D), InvalidInput);
}

TEST_CASE("seed decomposition") {
  auto d = decompose_seed(Partition::parse("3,5,8,11,13,19,21,23,25"));
  CHECK(d.base.to_string() == "1,3,5,7,9,11,13,15,17");
  CHECK(d.mu.to_string() == "2,2,3,4,4,8,8,8,8");
  CHECK(d.seed.weight() == d.base.weight() + d.mu.weight());
  REQUIRE(d.even_groups.size() == 3);
  CHECK(d.even_groups[0] == SeedGroup{0, 1, 2});
  CHECK(d.even_groups[1] == SeedGroup{3, 4, 4});
  CHECK(d.even_groups[2] == SeedGroup{5, 8, 8});
}

TEST_CASE("expand_seed worked examples") {
  auto e = expand_seed(Partition::parse("3,5,8,11,13,19,21,23,25"), KrVariant::D);
  std::vector<std::string> want = {
      "3,5,8,11,13,19,21,23,25", "3,5,8,11,13,20,20,24,24", "3,5,8,12,12,19,21,23,25",
      "3,5,8,12,12,20,20,24,24", "4,4,8,11,13,19,21,23,25", "4,4,8,11,13,20,20,24,24",
      "4,4,8,12,12,19,21,23,25", "4,4,8,12,12,20,20,24,24"};
  CHECK(strings(e.partitions) == want);

  auto f = expand_seed(Partition::parse("1,3,6,11,13,16,18,23,25"), KrVariant::DPrime);
  CHECK(strings(f.partitions) ==
        std::vector<std::string>{"2,2,6,11,13,16,18,23,25", "2,2,6,11,13,16,18,24,24",
                                 "2,2,6,12,12,16,18,23,25", "2,2,6,12,12,16,18,24,24"});
  REQUIRE(f.forced.has_value());
  CHECK(f.forced->first == 0);
  CHECK(f.forced->last == 1);

  auto g = expand_seed(Partition::parse("1,4,8"), KrVariant::D);
  CHECK(strings(g.partitions) == std::vector<std::string>{"1,4,8"});

  auto h = expand_seed(Partition::parse("1,3,5,7"), KrVariant::DPrime);
  CHECK(strings(h.partitions) == std::vector<std::string>{"2,2,6,6"});

  CHECK_THROWS_AS(expand_seed(Partition::parse("1,3,5"), KrVariant::DPrime), InvalidInput);
  CHECK_THROWS_AS(expand_seed(Partition::parse("4,4"), KrVariant::D), InvalidInput);
  CHECK_THROWS_AS(expand_seed(Partition::parse("1,2"), KrVariant::D), InvalidInput);
}

TEST_CASE("seed classes partition the kr sets") {
  for (auto v : {KrVariant::D, KrVariant::DPrime, KrVariant::DPrimePrime}) {
    for (int n = 0; n <= 30; ++n) {
      auto all = enumerate(n, std::nullopt, kr_predicate(v));
      std::set<Partition> seeds;
      for (const auto& p : all) {
        auto s = to_seed(p, v);
        CHECK(s.weight() == p.weight());
        CHECK(s.length() == p.length());
        seeds.insert(s);
        auto ex = expand_seed(s, v);
        CHECK(std::binary_search(ex.partitions.begin(), ex.partitions.end(), p));
      }
      std::set<Partition> covered;
      std::size_t total = 0;
      for (const auto& s : seeds) {
        auto ex = expand_seed(s, v);
        total += ex.partitions.size();
        for (const auto& q : ex.partitions) {
          CHECK(check_kr(q, v));
          CHECK(q.weight() == s.weight());
          CHECK(covered.insert(q).second);
        }
      }
      CHECK(total == all.size());
    }
  }
}

TEST_CASE("product_A and product_B") {
  const int Q = 20, T = 8;
  auto a1 = product_A(1, Q, T);
  Integer four = 0;
  for (int m = 0; m <= 4; ++m) four += a1.at(4, m) - (m > 0 ? a1.at(4, m - 1) : Integer(0));
  CHECK(four == 5);
  for (int a : {0, 1, 2, 3}) {
    CHECK(product_A(a, Q, T) == weighted_oracle(a, false, Q, T));
    CHECK(product_B(a, Q, T) == weighted_oracle(a, true, Q, T));
  }
  auto b2 = product_B(2, Q, T);
  CHECK(b2.at(0, 2) == 1);
  CHECK(b2.at(0, 1) == 0);
}
