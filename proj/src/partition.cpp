#include "qpartition/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "qpartition/error.hpp"

namespace qpart {

Partition::Partition(std::vector<int> parts, Zeros zeros) : parts_(std::move(parts)) {
  const int min_part = zeros == Zeros::Allowed ? 0 : 1;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < min_part)
      throw InvalidInput("part " + std::to_string(parts_[i]) + " below " + std::to_string(min_part));
    if (i > 0 && parts_[i] < parts_[i - 1]) throw InvalidInput("parts must be non-decreasing");
    weight_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text, Zeros zeros) {
  std::vector<int> parts;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return Partition({}, zeros);
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + end, v);
    if (ec != std::errc() || ptr != s.data() + end || end == pos)
      throw InvalidInput("bad partition text: " + std::string(text));
    parts.push_back(v);
    if (end == s.size()) break;
    pos = end + 1;
  }
  return Partition(std::move(parts), zeros);
}

int Partition::multiplicity(int value) const {
  auto [lo, hi] = std::equal_range(parts_.begin(), parts_.end(), value);
  return static_cast<int>(hi - lo);
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

KrVariant parse_variant(std::string_view text) {
  if (text == "1" || text == "D" || text == "KR1") return KrVariant::D;
  if (text == "2" || text == "DPRIME" || text == "KR2") return KrVariant::DPrime;
  if (text == "3" || text == "DPRIMEPRIME" || text == "KR3") return KrVariant::DPrimePrime;
  throw InvalidInput("unknown variant: " + std::string(text));
}

int variant_number(KrVariant v) {
  switch (v) {
    case KrVariant::D: return 1;
    case KrVariant::DPrime: return 2;
    case KrVariant::DPrimePrime: return 3;
  }
  return 0;
}

bool check_kr(std::span<const int> ps, KrVariant v) {
  const std::size_t n = ps.size();
  for (int x : ps)
    if (x <= 0) throw InvalidInput("kr conditions are defined for positive parts only");
  auto mult = [&](std::size_t i) {
    std::size_t lo = i, hi = i;
    while (lo > 0 && ps[lo - 1] == ps[i]) --lo;
    while (hi + 1 < n && ps[hi + 1] == ps[i]) ++hi;
    return hi - lo + 1;
  };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (ps[i + 1] - ps[i] == 1) return false;                 // (a)
    if (ps[i + 1] == ps[i] && ps[i] % 2 == 1) return false;   // (b)
  }
  for (std::size_t i = 0; i + 2 < n; ++i)                     // (c)
    if (ps[i + 1] % 2 == 0 && mult(i + 1) > 1 && ps[i + 2] - ps[i] < 4) return false;
  switch (v) {
    case KrVariant::D:
      return !(n >= 2 && ps[0] == 2 && ps[1] == 2);
    case KrVariant::DPrime:
      return n == 0 || ps[0] != 1;
    case KrVariant::DPrimePrime:
      return n == 0 || ps[0] > 3;
  }
  return false;
}

bool check_kr(const Partition& p, KrVariant v) { return check_kr(p.parts(), v); }

bool check_at_most_twice(std::span<const int> ps) {
  for (std::size_t i = 0; i + 2 < ps.size(); ++i)
    if (ps[i] == ps[i + 2]) return false;
  return true;
}

bool check_at_most_twice(const Partition& p) { return check_at_most_twice(p.parts()); }

PartsPredicate kr_predicate(KrVariant v) {
  return [v](std::span<const int> ps) { return check_kr(ps, v); };
}

PartsPredicate at_most_twice_predicate() {
  return [](std::span<const int> ps) { return check_at_most_twice(ps); };
}

namespace {

// Non-decreasing sequences, smallest next part first, so output is lexicographic.
template <class Visit>
void extend(std::vector<int>& cur, int remaining, int min_part, int max_len, Visit& visit) {
  visit(cur, remaining);
  if (remaining == 0 || static_cast<int>(cur.size()) >= max_len) return;
  for (int x = min_part; x <= remaining; ++x) {
    cur.push_back(x);
    extend(cur, remaining - x, x, max_len, visit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n, std::optional<int> length, const PartsPredicate& pred) {
  if (n < 0) throw InvalidInput("negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  const int max_len = length ? *length : n;
  if (length && *length < 0) return out;
  auto visit = [&](const std::vector<int>& ps, int remaining) {
    if (remaining != 0) return;
    if (length && static_cast<int>(ps.size()) != *length) return;
    if (pred(ps)) out.emplace_back(ps);
  };
  // parts must be able to reach the target length: prune by the smallest part
  if (length && *length > 0) {
    std::vector<int> c;
    auto rec = [&](auto&& self, int remaining, int min_part, int left) -> void {
      if (left == 0) {
        if (remaining == 0 && pred(c)) out.emplace_back(c);
        return;
      }
      for (int x = min_part; x * left <= remaining; ++x) {
        c.push_back(x);
        self(self, remaining - x, x, left - 1);
        c.pop_back();
      }
    };
    rec(rec, n, 1, *length);
    return out;
  }
  extend(cur, n, 1, max_len, visit);
  return out;
}

void for_each_partition(int max_n, int max_len,
                        const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> cur;
  auto v = [&](const std::vector<int>& ps, int) { visit(ps); };
  extend(cur, max_n, 1, max_len, v);
}

BiSeries brute_series(const PartsPredicate& pred, int max_q, int max_t) {
  BiSeries out(max_q, max_t);
  std::vector<int> cur;
  auto visit = [&](const std::vector<int>& ps, int remaining) {
    if (pred(ps)) out.at(max_q - remaining, static_cast<int>(ps.size())) += 1;
  };
  extend(cur, max_q, 1, max_t, visit);
  return out;
}

}  // namespace qpart
