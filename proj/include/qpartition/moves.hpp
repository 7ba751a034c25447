#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qpartition/partition.hpp"

namespace qpart {

enum class ItemKind { RepeatingPair, ConsecutivePair, Singleton };
enum class SingletonClass { Undetermined, Immobile, Moveable };

struct Item {
  ItemKind kind = ItemKind::Singleton;
  int low = 0;
  SingletonClass cls = SingletonClass::Undetermined;

  bool is_pair() const { return kind != ItemKind::Singleton; }
  int high() const { return kind == ItemKind::ConsecutivePair ? low + 1 : low; }
  bool operator==(const Item&) const = default;
};

class TaggedPartition {
 public:
  TaggedPartition() = default;
  // Greedy leftmost pairing. Throws InvalidInput if a value appears 3+ times.
  static TaggedPartition tag(const Partition& p);
  // Bracket notation, e.g. "[1,2],[3,4],4,[6,6]". The structure must be the
  // greedy tag of its flattening.
  static TaggedPartition parse(std::string_view text);

  const Partition& parts() const noexcept { return parts_; }
  std::span<const Item> items() const noexcept { return items_; }
  int pair_count() const noexcept { return static_cast<int>(pair_pos_.size()); }
  // i-th pair counted from the smallest.
  const Item& pair(int i) const;
  int pair_item_index(int i) const;

  // Marks singletons before the last pair immobile and the rest moveable.
  void classify_singletons();

  std::string to_string() const;
  // The structure is a function of the parts; singleton classes are ignored.
  bool operator==(const TaggedPartition& o) const { return parts_ == o.parts_; }

 private:
  Partition parts_;
  std::vector<Item> items_;
  std::vector<int> pair_pos_;
};

std::vector<Item> greedy_tag(std::span<const int> parts);

struct MoveEvent {
  std::string op;           // "backward", "forward", "singleton"
  std::vector<int> pair;    // values before
  std::vector<int> result;  // values after
  bool regroup = false;
  bool operator==(const MoveEvent&) const = default;
};

// nullopt means BLOCKED. Throws InvalidInput on a bad pair index.
std::optional<TaggedPartition> backward_move(const TaggedPartition& tp, int pair_index,
                                             MoveEvent* event = nullptr);
// Exact inverse of backward_move; throws InvalidInput if no legal inverse exists.
TaggedPartition forward_move(const TaggedPartition& tp, int pair_index,
                             MoveEvent* event = nullptr);

struct Decomposition {
  TaggedPartition base;
  Partition mu;     // n2 parts, multiples of 3, zeros allowed
  Partition theta;  // n11 + n12 parts, zeros allowed
  int n2 = 0;
  int n11 = 0;
  int n12 = 0;
  bool operator==(const Decomposition&) const = default;
};

Decomposition decompose(const Partition& p, std::vector<MoveEvent>* trace = nullptr);
Partition compose(const Decomposition& d, std::vector<MoveEvent>* trace = nullptr);

// Throws InvalidInput describing the first violated invariant.
void validate(const Decomposition& d);

// Low value of the largest pair, 0 when there is none.
int largest_pair_index(const TaggedPartition& tp);

struct BaseStructure {
  TaggedPartition structure;  // pairs, blocks and immobile singletons only
  int m1 = 0;
  int m2 = 0;
  int m3 = 0;
  int stray = 0;  // singletons that are not the middle of a block
  int largest_pair = 0;
  int parity = 0;  // 0 for [m,m], 1 for [m,m+1]
  int weight = 0;
};

// Every partition that ends in a pair, has n2 pairs and at most
// max_singletons singletons, and admits no backward move on any pair.
std::vector<BaseStructure> enumerate_blocked_structures(int n2, int max_singletons,
                                                        std::optional<int> max_weight);

// Bases with exactly m1 repeating pairs, m2 consecutive pairs and m3 blocks.
std::vector<BaseStructure> enumerate_bases(int m1, int m2, int m3,
                                           std::optional<int> max_weight = std::nullopt);

nlohmann::json to_json(const MoveEvent& e);
nlohmann::json to_json(const Decomposition& d);

}  // namespace qpart
