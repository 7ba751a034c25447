#include "qpartition/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "qpartition/error.hpp"

namespace qpart {

namespace {

const Integer kZero = 0;

}  // namespace

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(Integer c, int degree) {
  if (c == 0) return {};
  if (degree < 0) throw InvalidInput("negative degree " + std::to_string(degree));
  std::vector<Integer> v(degree + 1);
  v[degree] = std::move(c);
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> QPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

std::optional<int> QPoly::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

const Integer& QPoly::operator[](int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[d];
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int d = static_cast<int>(coeffs_.size()) - 1; d >= 0; --d) {
    const Integer& c = coeffs_[d];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (d != 1) out += "^" + std::to_string(d);
  }
  return out;
}

QPoly QPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidInput("empty polynomial");
  std::map<int, Integer> terms;
  std::size_t i = 0;
  auto digits = [&](std::size_t& k) {
    std::size_t start = k;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(start, k - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw InvalidInput("bad polynomial: " + s);
    }
    std::string num = digits(i);
    Integer c = num.empty() ? Integer(1) : Integer(num);
    int d = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      d = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = digits(i);
        if (e.empty()) throw InvalidInput("bad exponent: " + s);
        d = std::stoi(e);
      }
    } else if (num.empty()) {
      throw InvalidInput("bad polynomial: " + s);
    }
    terms[d] += sign * c;
  }
  std::vector<Integer> v(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [d, c] : terms) v[d] = c;
  return QPoly(std::move(v));
}

QPoly shift(const QPoly& p, int k) {
  if (p.is_zero()) return p;
  if (k < 0) throw std::logic_error("negative shift of a nonzero polynomial");
  std::vector<Integer> v(k + p.coeffs().size());
  std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin() + k);
  return QPoly(std::move(v));
}

QPoly stretch(const QPoly& p, int base) {
  if (base < 1) throw InvalidInput("stretch base must be >= 1");
  if (p.is_zero()) return p;
  std::vector<Integer> v((p.coeffs().size() - 1) * base + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i * base] = p.coeffs()[i];
  return QPoly(std::move(v));
}

bool is_nonnegative(const QPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return c >= 0; });
}

QPoly qbinomial(int n, int k, int base) {
  if (n < 0 || k < 0 || k > n) return {};
  if (base < 1) throw InvalidInput("qbinomial base must be >= 1");
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, QPoly> memo;
  std::lock_guard lock(mu);
  auto key = std::tuple{n, k, base};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // row-by-row Pascal, smallest n first
  std::vector<QPoly> row{QPoly::one()};
  for (int r = 1; r <= n; ++r) {
    std::vector<QPoly> next(r + 1);
    for (int j = 0; j <= r; ++j) {
      QPoly v;
      if (j <= r - 1) v += shift(row[j], j * base);
      if (j >= 1) v += row[j - 1];
      next[j] = std::move(v);
    }
    row = std::move(next);
  }
  for (int j = 0; j <= n; ++j) memo.emplace(std::tuple{n, j, base}, row[j]);
  return row[k];
}

}  // namespace qpart
