#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpartition/biseries.hpp"

namespace qpart {

enum class Zeros { Forbidden, Allowed };

class Partition {
 public:
  Partition() = default;
  // Throws InvalidInput unless parts are non-decreasing and >= 1 (>= 0 when
  // zeros are allowed).
  explicit Partition(std::vector<int> parts, Zeros zeros = Zeros::Forbidden);
  // "1,4,4,5"; the empty string is the empty partition.
  static Partition parse(std::string_view text, Zeros zeros = Zeros::Forbidden);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int multiplicity(int value) const;

  std::string to_string() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Partition& o) const {
    return parts_ <=> o.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

enum class KrVariant { D, DPrime, DPrimePrime };

// "1" | "2" | "3", also "D", "DPRIME", "DPRIMEPRIME".
KrVariant parse_variant(std::string_view text);
int variant_number(KrVariant v);

using PartsPredicate = std::function<bool(std::span<const int>)>;

bool check_kr(std::span<const int> parts, KrVariant v);
bool check_kr(const Partition& p, KrVariant v);
bool check_at_most_twice(std::span<const int> parts);
bool check_at_most_twice(const Partition& p);

PartsPredicate kr_predicate(KrVariant v);
PartsPredicate at_most_twice_predicate();

// Partitions of n (with exactly `length` parts if given) accepted by pred,
// in lexicographic order of their part sequences.
std::vector<Partition> enumerate(int n, std::optional<int> length, const PartsPredicate& pred);

// Visits every partition of weight <= max_n with at most max_len parts.
void for_each_partition(int max_n, int max_len,
                        const std::function<void(std::span<const int>)>& visit);

BiSeries brute_series(const PartsPredicate& pred, int max_q, int max_t);

}  // namespace qpart
