#include "qpartition/moves.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "qpartition/error.hpp"

namespace qpart {

std::vector<Item> greedy_tag(std::span<const int> ps) {
  std::vector<Item> items;
  for (std::size_t i = 0; i < ps.size();) {
    if (i + 1 < ps.size() && ps[i + 1] - ps[i] <= 1) {
      items.push_back({ps[i + 1] == ps[i] ? ItemKind::RepeatingPair : ItemKind::ConsecutivePair, ps[i]});
      i += 2;
    } else {
      items.push_back({ItemKind::Singleton, ps[i]});
      i += 1;
    }
  }
  return items;
}

namespace {

std::vector<int> pair_positions(const std::vector<Item>& items) {
  std::vector<int> pos;
  for (std::size_t k = 0; k < items.size(); ++k)
    if (items[k].is_pair()) pos.push_back(static_cast<int>(k));
  return pos;
}

void flatten_into(std::vector<int>& out, const Item& it) {
  out.push_back(it.low);
  if (it.is_pair()) out.push_back(it.high());
}

std::vector<int> flatten(std::span<const Item> items) {
  std::vector<int> out;
  for (const auto& it : items) flatten_into(out, it);
  return out;
}

bool at_most_twice_sorted(const std::vector<int>& ps) {
  for (std::size_t i = 0; i + 2 < ps.size(); ++i)
    if (ps[i] == ps[i + 2]) return false;
  return true;
}

bool same_pair(const Item& a, const Item& b) { return a.kind == b.kind && a.low == b.low; }

std::vector<int> pair_values(const Item& it) {
  return it.kind == ItemKind::ConsecutivePair ? std::vector<int>{it.low, it.low + 1}
                                              : std::vector<int>{it.low, it.low};
}

struct Tagged {
  std::vector<int> parts;
  std::vector<Item> items;
  std::vector<int> pos;

  explicit Tagged(std::vector<int> ps) : parts(std::move(ps)), items(greedy_tag(parts)) {
    pos = pair_positions(items);
  }
};

// Backward move on plain parts; nullopt when blocked.
std::optional<std::vector<int>> backward_parts(const Tagged& t, int i, MoveEvent* ev) {
  const Item& p = t.items[t.pos[i]];
  std::vector<int> raw = p.kind == ItemKind::RepeatingPair ? std::vector<int>{p.low - 2, p.low - 1}
                                                           : std::vector<int>{p.low - 1, p.low - 1};
  if (raw[0] < 1) return std::nullopt;
  std::vector<int> next;
  for (std::size_t k = 0; k < t.items.size(); ++k) {
    if (static_cast<int>(k) == t.pos[i])
      next.insert(next.end(), raw.begin(), raw.end());
    else
      flatten_into(next, t.items[k]);
  }
  std::sort(next.begin(), next.end());
  if (!at_most_twice_sorted(next)) return std::nullopt;
  Tagged n(next);
  if (n.pos.size() != t.pos.size()) return std::nullopt;
  for (std::size_t j = 0; j < t.pos.size(); ++j)
    if (static_cast<int>(j) != i && !same_pair(n.items[n.pos[j]], t.items[t.pos[j]]))
      return std::nullopt;
  if (ev) {
    ev->op = "backward";
    ev->pair = pair_values(p);
    ev->result = pair_values(n.items[n.pos[i]]);
    ev->regroup = ev->result != raw;
  }
  return next;
}

std::vector<int> forward_parts(const Tagged& t, int i, MoveEvent* ev) {
  const int k = t.pos[i];
  const Item& p = t.items[k];
  struct Candidate {
    std::vector<int> parts;
    std::vector<int> raw;
    bool regroup;
  };
  std::vector<Candidate> found;
  auto attempt = [&](std::vector<int> active, std::vector<int> keep, std::size_t skip_to,
                     bool regroup) {
    std::vector<int> raw = active[0] == active[1] ? std::vector<int>{active[0] + 1, active[0] + 2}
                                                  : std::vector<int>{active[1] + 1, active[1] + 1};
    std::vector<int> next = flatten(std::span<const Item>(t.items).first(k));
    next.insert(next.end(), keep.begin(), keep.end());
    next.insert(next.end(), raw.begin(), raw.end());
    for (std::size_t j = skip_to; j < t.items.size(); ++j) flatten_into(next, t.items[j]);
    std::sort(next.begin(), next.end());
    if (!at_most_twice_sorted(next)) return;
    auto back = backward_parts(Tagged(next), i, nullptr);
    if (back && *back == t.parts) found.push_back({std::move(next), std::move(raw), regroup});
  };
  attempt(pair_values(p), {}, k + 1, false);
  if (k + 1 < static_cast<int>(t.items.size())) {
    const Item& c = t.items[k + 1];
    if (!c.is_pair() && c.low - p.high() <= 1)
      attempt({p.high(), c.low}, {p.low}, k + 2, true);
  }
  if (found.empty())
    throw InvalidInput("no forward move on pair " + std::to_string(i) + " of " +
                       Partition(t.parts).to_string());
  if (found.size() > 1) throw std::logic_error("forward move is ambiguous");
  if (ev) {
    Tagged n(found[0].parts);
    ev->op = "forward";
    ev->pair = pair_values(p);
    ev->result = pair_values(n.items[n.pos[i]]);
    ev->regroup = found[0].regroup || ev->result != found[0].raw;
  }
  return found[0].parts;
}

void check_pair_index(const TaggedPartition& tp, int i) {
  if (i < 0 || i >= tp.pair_count())
    throw InvalidInput("pair index " + std::to_string(i) + " out of range (" +
                       std::to_string(tp.pair_count()) + " pairs)");
}

}  // namespace

TaggedPartition TaggedPartition::tag(const Partition& p) {
  if (!check_at_most_twice(p))
    throw InvalidInput(p.to_string() + " has a part appearing more than twice");
  TaggedPartition t;
  t.parts_ = p;
  t.items_ = greedy_tag(p.parts());
  t.pair_pos_ = pair_positions(t.items_);
  return t;
}

TaggedPartition TaggedPartition::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::vector<Item> items;
  std::size_t i = 0;
  auto number = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw InvalidInput("bad base notation: " + s);
    return std::stoi(s.substr(start, i - start));
  };
  auto expect = [&](char c) {
    if (i >= s.size() || s[i] != c) throw InvalidInput("bad base notation: " + s);
    ++i;
  };
  while (i < s.size()) {
    if (s[i] == '[') {
      ++i;
      int a = number();
      expect(',');
      int b = number();
      expect(']');
      if (b == a)
        items.push_back({ItemKind::RepeatingPair, a});
      else if (b == a + 1)
        items.push_back({ItemKind::ConsecutivePair, a});
      else
        throw InvalidInput("pair [" + std::to_string(a) + "," + std::to_string(b) + "] is neither repeating nor consecutive");
    } else {
      items.push_back({ItemKind::Singleton, number()});
    }
    if (i < s.size()) expect(',');
  }
  auto flat = flatten(items);
  if (!std::is_sorted(flat.begin(), flat.end())) throw InvalidInput("base parts out of order: " + s);
  TaggedPartition t = tag(Partition(flat));
  std::vector<Item> plain = t.items_;
  if (plain != items) throw InvalidInput("structure is not the greedy pairing: " + s);
  return t;
}

const Item& TaggedPartition::pair(int i) const {
  check_pair_index(*this, i);
  return items_[pair_pos_[i]];
}

int TaggedPartition::pair_item_index(int i) const {
  check_pair_index(*this, i);
  return pair_pos_[i];
}

void TaggedPartition::classify_singletons() {
  const int last = pair_pos_.empty() ? -1 : pair_pos_.back();
  for (int k = 0; k < static_cast<int>(items_.size()); ++k)
    if (!items_[k].is_pair())
      items_[k].cls = k < last ? SingletonClass::Immobile : SingletonClass::Moveable;
}

std::string TaggedPartition::to_string() const {
  std::string out;
  for (const auto& it : items_) {
    if (!out.empty()) out += ',';
    if (it.is_pair())
      out += "[" + std::to_string(it.low) + "," + std::to_string(it.high()) + "]";
    else
      out += std::to_string(it.low);
  }
  return out;
}

std::optional<TaggedPartition> backward_move(const TaggedPartition& tp, int i, MoveEvent* ev) {
  check_pair_index(tp, i);
  auto r = backward_parts(Tagged(tp.parts().vec()), i, ev);
  if (!r) return std::nullopt;
  return TaggedPartition::tag(Partition(*r));
}

TaggedPartition forward_move(const TaggedPartition& tp, int i, MoveEvent* ev) {
  check_pair_index(tp, i);
  return TaggedPartition::tag(Partition(forward_parts(Tagged(tp.parts().vec()), i, ev)));
}

int largest_pair_index(const TaggedPartition& tp) {
  return tp.pair_count() == 0 ? 0 : tp.pair(tp.pair_count() - 1).low;
}

Decomposition decompose(const Partition& p, std::vector<MoveEvent>* trace) {
  if (!check_at_most_twice(p))
    throw InvalidInput(p.to_string() + " has a part appearing more than twice");
  Tagged cur(p.vec());
  const int n2 = static_cast<int>(cur.pos.size());
  std::vector<int> mu;
  for (int i = 0; i < n2; ++i) {
    int moves = 0;
    while (true) {
      MoveEvent ev;
      auto next = backward_parts(cur, i, trace ? &ev : nullptr);
      if (!next) break;
      cur = Tagged(std::move(*next));
      ++moves;
      if (trace) trace->push_back(std::move(ev));
    }
    mu.push_back(3 * moves);
  }
  const int last = cur.pos.empty() ? -1 : cur.pos.back();
  const int k = last < 0 ? 0 : cur.items[last].low;
  std::vector<Item> items(cur.items.begin(), cur.items.begin() + (last + 1));
  std::vector<int> theta;
  int n11 = 0;
  for (const auto& it : items)
    if (!it.is_pair()) {
      ++n11;
      theta.push_back(0);
    }
  int n12 = 0;
  for (std::size_t j = last + 1; j < cur.items.size(); ++j) {
    const int target = k + 2 * n12 + 1;
    const int v = cur.items[j].low;
    if (trace && v != target) trace->push_back({"singleton", {v}, {target}, false});
    theta.push_back(v - target);
    items.push_back({ItemKind::Singleton, target});
    ++n12;
  }
  Decomposition d;
  d.base = TaggedPartition::tag(Partition(flatten(items)));
  d.base.classify_singletons();
  d.mu = Partition(mu, Zeros::Allowed);
  d.theta = Partition(theta, Zeros::Allowed);
  d.n2 = n2;
  d.n11 = n11;
  d.n12 = n12;
  return d;
}

void validate(const Decomposition& d) {
  const auto& b = d.base;
  auto fail = [](const std::string& why) { throw InvalidInput("invalid decomposition: " + why); };
  if (d.n2 < 0 || d.n11 < 0 || d.n12 < 0) fail("negative counts");
  if (b.pair_count() != d.n2) fail("base has " + std::to_string(b.pair_count()) + " pairs, n2 = " + std::to_string(d.n2));
  if (d.mu.length() != d.n2) fail("mu must have n2 parts");
  if (d.theta.length() != d.n11 + d.n12) fail("theta must have n11 + n12 parts");
  for (int x : d.mu.parts())
    if (x % 3) fail("mu parts must be multiples of 3");
  for (int j = 0; j < d.n11; ++j)
    if (d.theta[j] != 0) fail("first n11 parts of theta must be 0");
  const int last = b.pair_count() ? b.pair_item_index(b.pair_count() - 1) : -1;
  const int k = largest_pair_index(b);
  int immobile = 0, moveable = 0;
  for (int j = 0; j < static_cast<int>(b.items().size()); ++j) {
    const Item& it = b.items()[j];
    if (it.is_pair()) continue;
    if (j < last) {
      ++immobile;
    } else {
      if (it.low != k + 2 * moveable + 1) fail("moveable singletons must sit on the staircase above the largest pair");
      ++moveable;
    }
  }
  if (immobile != d.n11 || moveable != d.n12) fail("singleton counts do not match n11, n12");
  Tagged t(b.parts().vec());
  for (int i = 0; i < d.n2; ++i)
    if (backward_parts(t, i, nullptr)) fail("pair " + std::to_string(i) + " of the base can still move");
}

Partition compose(const Decomposition& d, std::vector<MoveEvent>* trace) {
  validate(d);
  std::vector<Item> items(d.base.items().begin(), d.base.items().end());
  const int last = d.n2 ? d.base.pair_item_index(d.n2 - 1) : -1;
  for (int j = 0; j < d.n12; ++j) {
    Item& it = items[last + 1 + j];
    const int th = d.theta[d.n11 + j];
    if (trace && th) trace->push_back({"singleton", {it.low}, {it.low + th}, false});
    it.low += th;
  }
  Tagged cur(flatten(items));
  for (int i = d.n2 - 1; i >= 0; --i)
    for (int r = 0; r < d.mu[i] / 3; ++r) {
      MoveEvent ev;
      cur = Tagged(forward_parts(cur, i, trace ? &ev : nullptr));
      if (trace) trace->push_back(std::move(ev));
    }
  return Partition(cur.parts);
}

namespace {

BaseStructure classify(const std::vector<int>& parts) {
  BaseStructure b;
  b.structure = TaggedPartition::tag(Partition(parts));
  b.structure.classify_singletons();
  auto items = b.structure.items();
  for (std::size_t k = 0; k < items.size();) {
    const Item& it = items[k];
    if (it.kind == ItemKind::ConsecutivePair && k + 2 < items.size() &&
        items[k + 1].kind == ItemKind::Singleton && items[k + 1].low == it.low + 1 &&
        items[k + 2].kind == ItemKind::RepeatingPair && items[k + 2].low == it.low + 3) {
      ++b.m3;
      k += 3;
      continue;
    }
    if (it.kind == ItemKind::RepeatingPair) ++b.m1;
    else if (it.kind == ItemKind::ConsecutivePair) ++b.m2;
    else ++b.stray;
    ++k;
  }
  if (b.structure.pair_count()) {
    const Item& top = b.structure.pair(b.structure.pair_count() - 1);
    b.largest_pair = top.low;
    b.parity = top.kind == ItemKind::ConsecutivePair ? 1 : 0;
  }
  b.weight = b.structure.parts().weight();
  return b;
}

}  // namespace

std::vector<BaseStructure> enumerate_blocked_structures(int n2, int max_singletons,
                                                        std::optional<int> max_weight) {
  if (n2 < 0 || max_singletons < 0) throw InvalidInput("negative counts");
  std::vector<BaseStructure> out;
  if (n2 == 0) {
    out.push_back(classify({}));
    return out;
  }
  // A blocked pair sits within a few units of the part before it, so parts
  // stay below this; the guard at the end checks it was never approached.
  const int vmax = 3 * (2 * n2 + max_singletons) + 3;
  int seen_max = 0;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int sum) -> void {
    Tagged t(parts);
    const int pairs = static_cast<int>(t.pos.size());
    const bool ends_in_pair = !t.items.empty() && t.items.back().is_pair();
    int singles = static_cast<int>(t.items.size()) - pairs;
    if (!ends_in_pair && !t.items.empty()) --singles;  // trailing one may still pair
    if (pairs > n2 || singles > max_singletons) return;
    if (ends_in_pair && backward_parts(t, pairs - 1, nullptr)) return;
    if (pairs == n2 && ends_in_pair) {
      for (int i = 0; i < n2; ++i)
        if (backward_parts(t, i, nullptr)) return;
      seen_max = std::max(seen_max, parts.back());
      out.push_back(classify(parts));
      return;
    }
    const int from = parts.empty() ? 1 : parts.back();
    for (int w = from; w <= vmax; ++w) {
      if (max_weight && sum + w > *max_weight) break;
      if (parts.size() >= 2 && parts[parts.size() - 2] == w) continue;
      parts.push_back(w);
      self(self, sum + w);
      parts.pop_back();
    }
  };
  rec(rec, 0);
  if (seen_max > vmax - 3) throw std::logic_error("base enumeration bound reached");
  std::sort(out.begin(), out.end(), [](const BaseStructure& a, const BaseStructure& b) {
    return a.structure.parts() < b.structure.parts();
  });
  return out;
}

std::vector<BaseStructure> enumerate_bases(int m1, int m2, int m3, std::optional<int> max_weight) {
  if (m1 < 0 || m2 < 0 || m3 < 0) throw InvalidInput("negative counts");
  std::vector<BaseStructure> out;
  for (auto& b : enumerate_blocked_structures(m1 + m2 + 2 * m3, m3, max_weight))
    if (b.m1 == m1 && b.m2 == m2 && b.m3 == m3 && b.stray == 0) out.push_back(std::move(b));
  return out;
}

nlohmann::json to_json(const MoveEvent& e) {
  return {{"op", e.op}, {"pair", e.pair}, {"result", e.result}, {"regroup", e.regroup}};
}

nlohmann::json to_json(const Decomposition& d) {
  return {{"base", d.base.to_string()},
          {"mu", d.mu.to_string()},
          {"theta", d.theta.to_string()},
          {"n2", d.n2},
          {"n11", d.n11},
          {"n12", d.n12},
          {"weights",
           {{"lambda", d.base.parts().weight() + d.mu.weight() + d.theta.weight()},
            {"base", d.base.parts().weight()},
            {"mu", d.mu.weight()},
            {"theta", d.theta.weight()}}}};
}

}  // namespace qpart
