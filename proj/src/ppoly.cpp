#include "qpartition/ppoly.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qpartition/error.hpp"
#include "qpartition/moves.hpp"

namespace qpart {

const QPoly& PTable::eval(const PKey& k) {
  static const QPoly kZero;
  static const QPoly kOne = QPoly::one();
  if (k.m1 < 0 || k.m2 < 0 || k.m3 < 0 || k.s <= 0) return kZero;
  if (k.m1 == 0 && k.m2 == 0 && k.m3 == 0) return k.s == 1 && k.parity == 0 ? kOne : kZero;
  if (auto it = memo_.find(k); it != memo_.end()) return it->second;

  const int m = k.s - 1;
  auto P = [&](int parity, int m1, int m2, int m3, int s) -> const QPoly& {
    return eval({m1, m2, m3, s, parity});
  };
  QPoly out;
  if (k.parity == 0) {
    QPoly a = P(0, k.m1 - 1, k.m2, k.m3, m) + P(1, k.m1 - 1, k.m2, k.m3, m - 1) +
              P(0, k.m1 - 1, k.m2, k.m3, m - 1);
    if (!a.is_zero()) out += shift(a, 2 * m);
    QPoly b = P(1, k.m1, k.m2, k.m3 - 1, m - 3) + P(0, k.m1, k.m2, k.m3 - 1, m - 3) +
              P(1, k.m1, k.m2, k.m3 - 1, m - 4);
    if (!b.is_zero()) {
      if (5 * m - 7 < 0) throw std::logic_error("negative exponent on a nonzero P bracket");
      out += shift(b, 5 * m - 7);
    }
  } else {
    QPoly a = P(1, k.m1, k.m2 - 1, k.m3, m) + P(0, k.m1, k.m2 - 1, k.m3, m) +
              P(1, k.m1, k.m2 - 1, k.m3, m - 1);
    if (!a.is_zero()) out += shift(a, 2 * m + 1);
  }
  return memo_.emplace(k, std::move(out)).first->second;
}

QPoly PTable::parity(const PKey& k) {
  if (k.parity != 0 && k.parity != 1) throw InvalidInput("parity must be 0 or 1");
  std::lock_guard lock(mu_);
  return eval(k);
}

QPoly PTable::total(int m1, int m2, int m3, int s) {
  std::lock_guard lock(mu_);
  return eval({m1, m2, m3, s, 0}) + eval({m1, m2, m3, s, 1});
}

std::size_t PTable::size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

PTable& default_ptable() {
  static PTable table;
  return table;
}

QPoly p_parity(const PKey& k) { return default_ptable().parity(k); }

QPoly p(int m1, int m2, int m3, int s) { return default_ptable().total(m1, m2, m3, s); }

std::pair<int, int> p_support(int m1, int m2, int m3) {
  return {m1 + m2 + 4 * m3 + 1, 2 * (m1 + m2) + 4 * m3 + 1};
}

ClosedFormKind parse_closed_form_kind(const std::string& name) {
  if (name == "PX00") return ClosedFormKind::PX00;
  if (name == "P0X0") return ClosedFormKind::P0X0;
  if (name == "P00X") return ClosedFormKind::P00X;
  if (name == "PX0X") return ClosedFormKind::PX0X;
  if (name == "P0XX") return ClosedFormKind::P0XX;
  throw InvalidInput("unknown closed form " + name);
}

std::string to_string(ClosedFormKind kind) {
  switch (kind) {
    case ClosedFormKind::PX00: return "PX00";
    case ClosedFormKind::P0X0: return "P0X0";
    case ClosedFormKind::P00X: return "P00X";
    case ClosedFormKind::PX0X: return "PX0X";
    case ClosedFormKind::P0XX: return "P0XX";
  }
  return "?";
}

bool in_shape(ClosedFormKind kind, const ClosedFormParams& c) {
  if (c.m1 < 0 || c.m2 < 0 || c.m3 < 0 || c.s < 1) return false;
  switch (kind) {
    case ClosedFormKind::PX00: return c.m2 == 0 && c.m3 == 0;
    case ClosedFormKind::P0X0: return c.m1 == 0 && c.m3 == 0 && c.m2 >= 1;
    case ClosedFormKind::P00X: return c.m1 == 0 && c.m2 == 0;
    case ClosedFormKind::PX0X: return c.m2 == 0 && c.s == c.m1 + 4 * c.m3 + 1;
    case ClosedFormKind::P0XX: return c.m1 == 0 && c.s == c.m2 + 4 * c.m3 + 1;
  }
  return false;
}

namespace {

// m3_quadratic, m3_linear: coefficients of the m3 terms in the exponent
QPoly closed_form_impl(ClosedFormKind kind, const ClosedFormParams& c, int m3_sq, int m3_lin) {
  if (!in_shape(kind, c))
    throw InvalidInput(to_string(kind) + " is not defined at (" + std::to_string(c.m1) + "," +
                       std::to_string(c.m2) + "," + std::to_string(c.m3) + "," +
                       std::to_string(c.s) + ")");
  const int m = c.s - 1;
  const int m3part = m3_sq * c.m3 * c.m3 + m3_lin * c.m3;
  auto scaled = [](const QPoly& b, int e) { return b.is_zero() ? b : shift(b, e); };
  switch (kind) {
    case ClosedFormKind::PX00:
      return scaled(qbinomial(c.m1, m - c.m1, 2), 2 * c.m1 * c.m1 - 2 * m * c.m1 + m * m + m);
    case ClosedFormKind::P0X0:
      return scaled(qbinomial(c.m2 - 1, m - c.m2, 2),
                    2 * c.m2 * c.m2 + c.m2 - 2 * m * c.m2 + m * m + m);
    case ClosedFormKind::P00X:
      return m == 4 * c.m3 ? shift(QPoly::one(), m3part) : QPoly();
    case ClosedFormKind::PX0X:
      return scaled(qbinomial(c.m1 + c.m3, c.m1, 3),
                    c.m1 * c.m1 + c.m1 + 5 * c.m1 * c.m3 + m3part);
    case ClosedFormKind::P0XX:
      return scaled(qbinomial(c.m2 + c.m3, c.m2, 3),
                    c.m2 * c.m2 + 2 * c.m2 + 5 * c.m2 * c.m3 + m3part);
  }
  return {};
}

}  // namespace

QPoly closed_form(ClosedFormKind kind, const ClosedFormParams& params) {
  return closed_form_impl(kind, params, 10, 3);
}

QPoly closed_form_as_printed(ClosedFormKind kind, const ClosedFormParams& params) {
  // P00X prints 10 m3^2 + 23 m3; the two mixed forms print 10 m3 + 23 m3
  if (kind == ClosedFormKind::P00X) return closed_form_impl(kind, params, 10, 23);
  return closed_form_impl(kind, params, 0, 33);
}

std::vector<ClosedFormDiscrepancy> printed_exponent_discrepancies(int max_m12, int max_m3) {
  std::vector<ClosedFormDiscrepancy> out;
  for (int m3 = 0; m3 <= max_m3; ++m3) {
    std::vector<std::pair<ClosedFormKind, ClosedFormParams>> keys;
    keys.push_back({ClosedFormKind::P00X, {0, 0, m3, 4 * m3 + 1}});
    for (int a = 0; a <= max_m12; ++a) {
      keys.push_back({ClosedFormKind::PX0X, {a, 0, m3, a + 4 * m3 + 1}});
      keys.push_back({ClosedFormKind::P0XX, {0, a, m3, a + 4 * m3 + 1}});
    }
    for (const auto& [kind, prm] : keys) {
      QPoly rec = p(prm.m1, prm.m2, prm.m3, prm.s);
      QPoly printed = closed_form_as_printed(kind, prm);
      if (rec != printed) out.push_back({kind, prm, rec, printed});
    }
  }
  return out;
}

QPoly p_oracle(int m1, int m2, int m3, int s, int parity) {
  if (m1 < 0 || m2 < 0 || m3 < 0) return {};
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::vector<BaseStructure>> cache;
  std::vector<BaseStructure>* bases;
  {
    std::lock_guard lock(mu);
    auto key = std::tuple{m1, m2, m3};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_bases(m1, m2, m3)).first;
    bases = &it->second;
  }
  QPoly out;
  for (const auto& b : *bases)
    if (b.largest_pair == s - 1 && b.parity == parity) out += QPoly::monomial(1, b.weight);
  return out;
}

}  // namespace qpart
