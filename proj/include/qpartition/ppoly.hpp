#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qpartition/qpoly.hpp"

namespace qpart {

struct PKey {
  int m1 = 0;
  int m2 = 0;
  int m3 = 0;
  int s = 0;
  int parity = 0;
  auto operator<=>(const PKey&) const = default;
};

// Memo table for the P recursion. Safe to share between threads.
class PTable {
 public:
  QPoly parity(const PKey& k);
  QPoly total(int m1, int m2, int m3, int s);
  std::size_t size() const;

 private:
  const QPoly& eval(const PKey& k);
  mutable std::recursive_mutex mu_;
  std::map<PKey, QPoly> memo_;
};

// Process-wide table.
PTable& default_ptable();

QPoly p_parity(const PKey& k);
QPoly p(int m1, int m2, int m3, int s);

// Observed support window [lo, hi] in s.
std::pair<int, int> p_support(int m1, int m2, int m3);

enum class ClosedFormKind { PX00, P0X0, P00X, PX0X, P0XX };

struct ClosedFormParams {
  int m1 = 0;
  int m2 = 0;
  int m3 = 0;
  int s = 0;
};

ClosedFormKind parse_closed_form_kind(const std::string& name);
std::string to_string(ClosedFormKind kind);
bool in_shape(ClosedFormKind kind, const ClosedFormParams& params);
QPoly closed_form(ClosedFormKind kind, const ClosedFormParams& params);
// Same formulas with the m3 exponent exactly as printed.
QPoly closed_form_as_printed(ClosedFormKind kind, const ClosedFormParams& params);

struct ClosedFormDiscrepancy {
  ClosedFormKind kind;
  ClosedFormParams params;
  QPoly recursion;
  QPoly printed;
};

// Every in-shape key with m1, m2 <= max_m12, m3 <= max_m3 where the printed
// exponent disagrees with the recursion.
std::vector<ClosedFormDiscrepancy> printed_exponent_discrepancies(int max_m12, int max_m3);

QPoly p_oracle(int m1, int m2, int m3, int s, int parity);

}  // namespace qpart
