#pragma once

#include <optional>
#include <vector>

#include "qpartition/biseries.hpp"
#include "qpartition/partition.hpp"

namespace qpart {

// Inclusive index range [first, last] of mu sharing one value.
struct SeedGroup {
  int first = 0;
  int last = 0;
  int value = 0;
  bool operator==(const SeedGroup&) const = default;
};

struct SeedDecomposition {
  Partition seed;
  Partition base;  // 1,3,5,...
  Partition mu;    // seed - base, zeros allowed
  std::vector<SeedGroup> even_groups;
};

struct SeedExpansion {
  SeedDecomposition decomposition;
  // Groups toggled independently, as index ranges of the seed.
  std::vector<SeedGroup> toggled;
  // Leading zero run of mu that DPRIME rewrites in every output.
  std::optional<SeedGroup> forced;
  std::vector<Partition> partitions;  // sorted
};

Partition to_seed(const Partition& p, KrVariant v);
SeedDecomposition decompose_seed(const Partition& seed);
SeedExpansion expand_seed(const Partition& seed, KrVariant v);

BiSeries product_A(const Integer& a, int max_q, int max_t);
BiSeries product_B(const Integer& a, int max_q, int max_t);

}  // namespace qpart
