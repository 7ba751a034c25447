#include <doctest.h>

#include <map>

#include "qpartition/error.hpp"
#include "qpartition/partition.hpp"

using namespace qpart;

namespace {

bool kr(const char* s, KrVariant v) { return check_kr(Partition::parse(s), v); }

std::vector<std::string> strings(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("partition parsing and invariants") {
  auto p = Partition::parse("1,4,4,5,6,6,9,10,11,12,12,14");
  CHECK(p.length() == 12);
  CHECK(p.weight() == 94);
  CHECK(p.multiplicity(4) == 2);
  CHECK(p.multiplicity(7) == 0);
  CHECK(p.to_string() == "1,4,4,5,6,6,9,10,11,12,12,14");
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse(" 1, 2 ,3 ").to_string() == "1,2,3");
  CHECK_THROWS_AS(Partition::parse("3,1"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("0,1"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("1,x"), InvalidInput);
  CHECK_THROWS_AS(Partition::parse("1,,2"), InvalidInput);
  CHECK(Partition::parse("0,0,2", Zeros::Allowed).weight() == 2);
  CHECK_THROWS_AS(Partition({-1, 2}, Zeros::Allowed), InvalidInput);
}

TEST_CASE("check_kr examples") {
  CHECK_FALSE(kr("4,4,7,10", KrVariant::D));
  CHECK_FALSE(kr("3,6,6,10", KrVariant::D));
  CHECK(kr("1,3", KrVariant::D));
  CHECK_FALSE(kr("2,2", KrVariant::D));
  CHECK(kr("2,2", KrVariant::DPrime));
  CHECK_FALSE(kr("1,3", KrVariant::DPrime));
  CHECK_FALSE(kr("3,5", KrVariant::DPrimePrime));
  CHECK(kr("4,4", KrVariant::DPrimePrime));
  CHECK_FALSE(kr("1,2", KrVariant::D));  // (a)
  CHECK_FALSE(kr("3,3", KrVariant::D));  // (b)
  CHECK(kr("4,4,8", KrVariant::D));      // (c) with gap 4
  CHECK_FALSE(kr("4,4,7", KrVariant::D));
  CHECK(kr("3,5,8,11,13,19,21,23,25", KrVariant::D));
  CHECK(kr("4,4,8,12,12,20,20,24,24", KrVariant::D));
  CHECK(kr("2,2,6,12,12,16,18,24,24", KrVariant::DPrime));
  CHECK_THROWS_AS(check_kr(std::vector<int>{0, 2}, KrVariant::D), InvalidInput);
}

TEST_CASE("check_at_most_twice") {
  CHECK(check_at_most_twice(Partition::parse("1,1,2")));
  CHECK_FALSE(check_at_most_twice(Partition::parse("1,1,1")));
  CHECK(check_at_most_twice(Partition::parse("1,4,4,5,6,6,9,10,11,12,12,14")));
}

TEST_CASE("enumerate") {
  CHECK(strings(enumerate(4, std::nullopt, kr_predicate(KrVariant::D))) ==
        std::vector<std::string>{"1,3", "4"});
  auto zero = enumerate(0, std::nullopt, [](std::span<const int>) { return true; });
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  CHECK(strings(enumerate(3, std::nullopt, at_most_twice_predicate())) ==
        std::vector<std::string>{"1,2", "3"});
  auto all5 = enumerate(5, std::nullopt, [](std::span<const int>) { return true; });
  CHECK(strings(all5) == std::vector<std::string>{"1,1,1,1,1", "1,1,1,2", "1,1,3", "1,2,2",
                                                  "1,4", "2,3", "5"});
  CHECK(enumerate(5, 2, [](std::span<const int>) { return true; }).size() == 2);
}

TEST_CASE("p(n,m) recurrence") {
  auto any = [](std::span<const int>) { return true; };
  auto s = brute_series(any, 40, 40);
  for (int n = 1; n <= 40; ++n)
    for (int m = 1; m <= n; ++m) {
      Integer rhs = s.at(n - 1, m - 1) + (n - m >= 0 ? s.at(n - m, m) : Integer(0));
      CHECK(s.at(n, m) == rhs);
    }
  for (int n = 0; n <= 12; ++n)
    for (int m = 0; m <= n; ++m)
      CHECK(Integer(enumerate(n, m, any).size()) == s.at(n, m));
}

TEST_CASE("kr3 versus kr2 shifted by two") {
  for (int n = 0; n <= 30; ++n)
    for (int m = 0; m <= 6; ++m) {
      if (n < 3 * m) continue;
      for (const auto& p : enumerate(n, m, [](std::span<const int> ps) {
             return ps.empty() || ps[0] >= 3;
           })) {
        std::vector<int> lowered;
        for (int x : p.parts()) lowered.push_back(x - 2);
        bool lowered_ok = true;
        for (int x : lowered) lowered_ok = lowered_ok && x >= 1;
        bool rhs = lowered_ok && check_kr(lowered, KrVariant::DPrime);
        CHECK(check_kr(p, KrVariant::DPrimePrime) == rhs);
      }
    }
}

TEST_CASE("brute_series worked examples") {
  auto h = brute_series(at_most_twice_predicate(), 3, 3);
  Integer total = 0;
  for (int m = 0; m <= 3; ++m) total += h.at(3, m);
  CHECK(total == 2);

  const char* listed[] = {"3,5,8,11,13,19,21,23,25", "4,4,8,11,13,19,21,23,25",
                          "3,5,8,12,12,19,21,23,25", "4,4,8,12,12,19,21,23,25",
                          "3,5,8,11,13,20,20,24,24", "4,4,8,11,13,20,20,24,24",
                          "3,5,8,12,12,20,20,24,24", "4,4,8,12,12,20,20,24,24"};
  auto kr128 = enumerate(128, 9, kr_predicate(KrVariant::D));
  CHECK(kr128.size() >= 8);
  for (const char* s : listed)
    CHECK(std::binary_search(kr128.begin(), kr128.end(), Partition::parse(s)));

  auto kr116 = enumerate(116, 9, kr_predicate(KrVariant::DPrime));
  CHECK(kr116.size() >= 4);
  for (const char* s : {"2,2,6,11,13,16,18,23,25", "2,2,6,12,12,16,18,23,25",
                        "2,2,6,11,13,16,18,24,24", "2,2,6,12,12,16,18,24,24"})
    CHECK(std::binary_search(kr116.begin(), kr116.end(), Partition::parse(s)));
}

TEST_CASE("variant parsing") {
  CHECK(parse_variant("1") == KrVariant::D);
  CHECK(parse_variant("2") == KrVariant::DPrime);
  CHECK(parse_variant("3") == KrVariant::DPrimePrime);
  CHECK(parse_variant("DPRIME") == KrVariant::DPrime);
  CHECK_THROWS_AS(parse_variant("4"), InvalidInput);
}
