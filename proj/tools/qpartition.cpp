#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpartition/error.hpp"
#include "qpartition/genfun.hpp"
#include "qpartition/moves.hpp"
#include "qpartition/ppoly.hpp"
#include "qpartition/seedgen.hpp"
#include "qpartition/verify.hpp"

using nlohmann::json;
using namespace qpart;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QPARTITION_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap < 1) throw std::invalid_argument("");
      n = std::min(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      throw InvalidInput(std::string("QPARTITION_THREADS must be a positive integer, got '") + env + "'");
    }
  }
  return n;
}

Variant parse_genfun_variant(const std::string& s) {
  if (s == "h" || s == "H") return Variant::H;
  return to_variant(parse_variant(s));
}

// Numbers while they fit, decimal strings beyond 64 bits.
json coef_json(const Integer& c) {
  if (boost::multiprecision::msb(boost::multiprecision::abs(c)) < 62) return c.convert_to<long long>();
  return c.str();
}

json poly_json(const QPoly& q) {
  json out = json::array();
  const auto& c = q.coeffs();
  for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d)
    if (c[d] != 0) out.push_back({d, coef_json(c[d])});
  return out;
}

json partitions_json(const std::vector<Partition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json group_json(const SeedGroup& g) { return {{"first", g.first}, {"last", g.last}, {"value", g.value}}; }

struct KrOptions {
  std::string variant = "1";
  std::string form = "alternating";
  int max_q = 40;
  int max_t = 12;
  std::string format = "json";
};

int run_kr(const KrOptions& o) {
  GenFunSpec spec{parse_genfun_variant(o.variant), parse_form(o.form), o.max_q, o.max_t};
  BiSeries s = evaluate(spec);
  if (o.format == "table") {
    for (int n = 0; n <= s.max_q(); ++n)
      for (int m = 0; m <= s.max_t(); ++m)
        if (s.at(n, m) != 0) std::cout << n << '\t' << m << '\t' << s.at(n, m).str() << '\n';
    return 0;
  }
  emit({{"variant", o.variant},
        {"form", o.form},
        {"max_q", s.max_q()},
        {"max_t", s.max_t()},
        {"terms", to_json(s)}});
  return 0;
}

struct PpolyOptions {
  int m1 = 0, m2 = 0, m3 = 0, s = 0;
  int parity = -1;
  std::string closed;
  std::string format = "text";
};

int run_ppoly(const PpolyOptions& o) {
  if (o.m1 < 0 || o.m2 < 0 || o.m3 < 0 || o.s < 0) throw InvalidInput("m1, m2, m3 and s must be nonnegative");
  QPoly q;
  if (!o.closed.empty()) {
    auto kind = parse_closed_form_kind(o.closed);
    ClosedFormParams c{o.m1, o.m2, o.m3, o.s};
    if (!in_shape(kind, c)) throw InvalidInput(o.closed + " does not apply to these parameters");
    q = closed_form(kind, c);
  } else if (o.parity >= 0) {
    q = p_parity({o.m1, o.m2, o.m3, o.s, o.parity});
  } else {
    q = p(o.m1, o.m2, o.m3, o.s);
  }
  if (o.format == "json") emit(poly_json(q));
  else std::cout << q.to_string() << "\n";
  return 0;
}

int run_decompose(const std::string& text, bool trace) {
  auto lambda = Partition::parse(text);
  std::vector<MoveEvent> events;
  auto d = decompose(lambda, trace ? &events : nullptr);
  json out = to_json(d);
  if (trace) {
    out["trace"] = json::array();
    for (const auto& e : events) out["trace"].push_back(to_json(e));
  }
  emit(out);
  return 0;
}

int run_compose(const std::string& base, const std::string& mu, const std::string& theta, bool trace) {
  Decomposition d;
  d.base = TaggedPartition::parse(base);
  d.mu = Partition::parse(mu, Zeros::Allowed);
  d.theta = Partition::parse(theta, Zeros::Allowed);
  d.n2 = d.base.pair_count();
  // singletons after the largest pair form the staircase tail
  const auto items = d.base.items();
  const int last_pair = d.n2 ? d.base.pair_item_index(d.n2 - 1) : -1;
  for (int k = 0; k < static_cast<int>(items.size()); ++k)
    if (!items[k].is_pair()) (k < last_pair ? d.n11 : d.n12) += 1;
  if (d.n2 == 0) std::swap(d.n11, d.n12);
  d.base.classify_singletons();
  validate(d);
  std::vector<MoveEvent> events;
  auto lambda = compose(d, trace ? &events : nullptr);
  json out = {{"partition", lambda.to_string()}, {"weight", lambda.weight()}, {"decomposition", to_json(d)}};
  if (trace) {
    out["trace"] = json::array();
    for (const auto& e : events) out["trace"].push_back(to_json(e));
  }
  emit(out);
  return 0;
}

int run_seed_expand(const std::string& variant, const std::string& text) {
  const KrVariant v = parse_variant(variant);
  auto input = Partition::parse(text);
  auto seed = to_seed(input, v);
  auto e = expand_seed(seed, v);
  json groups = json::array();
  for (const auto& g : e.toggled) groups.push_back(group_json(g));
  json out = {{"variant", variant_number(v)},
              {"input", input.to_string()},
              {"seed", seed.to_string()},
              {"base", e.decomposition.base.to_string()},
              {"mu", e.decomposition.mu.to_string()},
              {"groups", groups},
              {"forced", e.forced ? group_json(*e.forced) : json(nullptr)},
              {"partitions", partitions_json(e.partitions)}};
  emit(out);
  return 0;
}

int run_bases(int m1, int m2, int m3, const std::string& format) {
  if (m1 < 0 || m2 < 0 || m3 < 0) throw InvalidInput("m1, m2, m3 must be nonnegative");
  auto bases = enumerate_bases(m1, m2, m3);
  if (format == "table") {
    for (const auto& b : bases)
      std::cout << b.structure.to_string() << '\t' << b.weight << '\t' << b.largest_pair << '\t' << b.parity
                << '\n';
    return 0;
  }
  json out = json::array();
  for (const auto& b : bases)
    out.push_back({{"structure", b.structure.to_string()},
                   {"weight", b.weight},
                   {"largest_pair", b.largest_pair},
                   {"parity", b.parity}});
  emit(out);
  return 0;
}

void print_suite(const SuiteResult& r) {
  std::cout << "suite " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& n : r.notes) std::cout << "  " << n << "\n";
  for (const auto& f : r.failures) std::cout << "  MISMATCH " << f << "\n";
}

int run_verify(const std::string& suite, int max_q) {
  std::vector<std::string> names;
  if (suite == "all") names = suite_names();
  else {
    auto all = suite_names();
    if (std::find(all.begin(), all.end(), suite) == all.end()) throw InvalidInput("unknown suite " + suite);
    names = {suite};
  }
  std::vector<SuiteResult> results(names.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) {
      try {
        results[i] = run_suite(names[i], max_q);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<unsigned>(worker_count(), static_cast<unsigned>(names.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  bool ok = true;
  for (const auto& r : results) {
    print_suite(r);
    ok = ok && r.passed;
  }
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kanade-Russell partitions, P polynomials and the move bijection"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "table"};

  KrOptions kr;
  auto* kr_cmd = app.add_subcommand("kr", "generating function of a partition class");
  kr_cmd->add_option("--variant", kr.variant, "1|2|3 or h")->capture_default_str();
  kr_cmd->add_option("--form", kr.form, "brute|alternating|positive|product")->capture_default_str();
  kr_cmd->add_option("--max-q", kr.max_q)->check(CLI::NonNegativeNumber)->capture_default_str();
  kr_cmd->add_option("--max-t", kr.max_t)->check(CLI::NonNegativeNumber)->capture_default_str();
  kr_cmd->add_option("--format", kr.format)->check(CLI::IsMember(formats))->capture_default_str();

  PpolyOptions pp;
  auto* pp_cmd = app.add_subcommand("ppoly", "P polynomial by recursion or closed form");
  pp_cmd->add_option("--m1", pp.m1)->required();
  pp_cmd->add_option("--m2", pp.m2)->required();
  pp_cmd->add_option("--m3", pp.m3)->required();
  pp_cmd->add_option("--s", pp.s)->required();
  pp_cmd->add_option("--parity", pp.parity, "0 or 1; default is the sum")->check(CLI::Range(0, 1));
  pp_cmd->add_option("--closed-form", pp.closed, "PX00|P0X0|P00X|PX0X|P0XX");
  pp_cmd->add_option("--format", pp.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string partition;
  bool trace = false;
  auto* dec_cmd = app.add_subcommand("decompose", "split a partition into base, mu and theta");
  dec_cmd->add_option("--partition", partition)->required();
  dec_cmd->add_flag("--trace", trace);

  std::string base, mu, theta;
  auto* com_cmd = app.add_subcommand("compose", "rebuild a partition from base, mu and theta");
  com_cmd->add_option("--base", base, "bracket notation, e.g. [1,2],3,[5,5]")->required();
  com_cmd->add_option("--mu", mu)->required();
  com_cmd->add_option("--theta", theta)->required();
  com_cmd->add_flag("--trace", trace);

  std::string variant = "1";
  auto* seed_cmd = app.add_subcommand("seed-expand", "seed of a partition and every partition it generates");
  seed_cmd->add_option("--variant", variant)->capture_default_str();
  seed_cmd->add_option("--partition", partition)->required();

  std::string suite = "all";
  int verify_q = 0;
  auto* ver_cmd = app.add_subcommand("verify", "run verification suites");
  ver_cmd->add_option("--suite", suite, "all or one of: appendix examples products forms corollary "
                                        "closed-forms oracle bijection positivity")
      ->capture_default_str();
  ver_cmd->add_option("--max-q", verify_q, "override the suite's main bound")->check(CLI::NonNegativeNumber);

  int bm1 = 0, bm2 = 0, bm3 = 0;
  std::string bformat = "json";
  auto* bases_cmd = app.add_subcommand("bases", "enumerate base structures");
  bases_cmd->add_option("--m1", bm1)->required();
  bases_cmd->add_option("--m2", bm2)->required();
  bases_cmd->add_option("--m3", bm3)->required();
  bases_cmd->add_option("--format", bformat)->check(CLI::IsMember(formats))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*kr_cmd) return run_kr(kr);
    if (*pp_cmd) return run_ppoly(pp);
    if (*dec_cmd) return run_decompose(partition, trace);
    if (*com_cmd) return run_compose(base, mu, theta, trace);
    if (*seed_cmd) return run_seed_expand(variant, partition);
    if (*ver_cmd) return run_verify(suite, verify_q);
    if (*bases_cmd) return run_bases(bm1, bm2, bm3, bformat);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
