#include "qpartition/seedgen.hpp"

#include <algorithm>
#include <string>

#include "qpartition/error.hpp"

namespace qpart {

namespace {

// (2k)+(2k) -> (2k-1)+(2k+1) until nothing changes.
std::vector<int> rewrite_repeated_evens(std::vector<int> ps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < ps.size(); ++i)
      if (ps[i] == ps[i + 1] && ps[i] % 2 == 0) {
        --ps[i];
        ++ps[i + 1];
        changed = true;
      }
    std::sort(ps.begin(), ps.end());
  }
  return ps;
}

// Runs of equal mu values: (first, last, value).
std::vector<SeedGroup> runs(const Partition& mu) {
  std::vector<SeedGroup> out;
  for (int i = 0; i < mu.length();) {
    int j = i;
    while (j + 1 < mu.length() && mu[j + 1] == mu[i]) ++j;
    out.push_back({i, j, mu[i]});
    i = j + 1;
  }
  return out;
}

void toggle(std::vector<int>& ps, const SeedGroup& g) {
  for (int i = g.first; i < g.last; i += 2) {
    if (ps[i] % 2 == 0 || ps[i + 1] != ps[i] + 2)
      throw InvalidInput("seed group is not a streak of consecutive odd parts");
    ++ps[i];
    --ps[i + 1];
  }
}

SeedExpansion expand_direct(const Partition& seed, KrVariant v) {
  SeedExpansion ex;
  ex.decomposition = decompose_seed(seed);
  ex.toggled = ex.decomposition.even_groups;
  for (const auto& r : runs(ex.decomposition.mu)) {
    if (r.value != 0 || v != KrVariant::DPrime) continue;
    if ((r.last - r.first + 1) % 2)
      throw InvalidInput("almost-seed has an odd number of leading zeros in mu");
    ex.forced = r;
  }
  const std::size_t e = ex.toggled.size();
  if (e > 24) throw InvalidInput("seed has too many groups to expand");
  for (std::size_t mask = 0; mask < (std::size_t{1} << e); ++mask) {
    std::vector<int> ps = seed.vec();
    if (ex.forced) toggle(ps, *ex.forced);
    for (std::size_t g = 0; g < e; ++g)
      if (mask >> g & 1) toggle(ps, ex.toggled[g]);
    Partition out(ps);
    if (!check_kr(out, v) || rewrite_repeated_evens(out.vec()) != seed.vec())
      throw InvalidInput("ill-formed seed " + seed.to_string() + ": generates " +
                         out.to_string());
    ex.partitions.push_back(std::move(out));
  }
  std::sort(ex.partitions.begin(), ex.partitions.end());
  return ex;
}

std::vector<int> shifted(std::span<const int> ps, int by) {
  std::vector<int> out(ps.begin(), ps.end());
  for (int& x : out) x += by;
  return out;
}

}  // namespace

Partition to_seed(const Partition& p, KrVariant v) {
  if (!check_kr(p, v))
    throw InvalidInput(p.to_string() + " is not in kr class " + std::to_string(variant_number(v)));
  return Partition(rewrite_repeated_evens(p.vec()));
}

SeedDecomposition decompose_seed(const Partition& seed) {
  SeedDecomposition d;
  d.seed = seed;
  std::vector<int> base, mu;
  for (int i = 0; i < seed.length(); ++i) {
    base.push_back(2 * i + 1);
    mu.push_back(seed[i] - (2 * i + 1));
  }
  d.base = Partition(std::move(base));
  try {
    d.mu = Partition(std::move(mu), Zeros::Allowed);
  } catch (const InvalidInput&) {
    throw InvalidInput(seed.to_string() + " is not a seed: it lies below the staircase or has adjacent parts closer than 2");
  }
  for (const auto& r : runs(d.mu))
    if (r.value > 0 && r.value % 2 == 0 && (r.last - r.first + 1) % 2 == 0)
      d.even_groups.push_back(r);
  return d;
}

SeedExpansion expand_seed(const Partition& seed, KrVariant v) {
  if (v != KrVariant::DPrimePrime) return expand_direct(seed, v);
  // kr3 partitions are kr2 partitions with every part raised by 2
  for (int x : seed.parts())
    if (x < 3) throw InvalidInput("kr3 seed parts must be at least 3");
  SeedExpansion low = expand_direct(Partition(shifted(seed.parts(), -2)), KrVariant::DPrime);
  SeedExpansion ex;
  ex.decomposition = decompose_seed(seed);
  ex.toggled = low.toggled;
  ex.forced = low.forced;
  for (auto& g : ex.toggled) g.value = ex.decomposition.mu[g.first];
  if (ex.forced) ex.forced->value = ex.decomposition.mu[ex.forced->first];
  for (const auto& p : low.partitions) {
    Partition up(shifted(p.parts(), 2));
    if (!check_kr(up, v)) throw std::logic_error("shifted expansion left kr3");
    ex.partitions.push_back(std::move(up));
  }
  return ex;
}

namespace {

BiSeries seed_product(const Integer& a, int max_q, int max_t, int zero_step) {
  BiSeries s = one(max_q, max_t);
  for (int n = 1; 2 * n - 1 <= max_q; ++n) {
    BiSeries f = s;
    if (2 * n <= max_q) f += mul_monomial(s, 1, 2 * n, 1);
    if (4 * n <= max_q && a != 1) f += mul_monomial(s, a - 1, 4 * n, 2);
    f = mul_geometric_inverse(f, 1, 2 * n - 1);
    if (4 * n <= max_q) f = mul_geometric_inverse(f, 2, 4 * n);
    s = std::move(f);
  }
  return mul_geometric_inverse(s, zero_step, 0);
}

}  // namespace

BiSeries product_A(const Integer& a, int max_q, int max_t) { return seed_product(a, max_q, max_t, 1); }

BiSeries product_B(const Integer& a, int max_q, int max_t) { return seed_product(a, max_q, max_t, 2); }

}  // namespace qpart
