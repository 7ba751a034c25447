#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpartition/biseries.hpp"
#include "qpartition/partition.hpp"

namespace qpart {

enum class Variant { KR1, KR2, KR3, H };
enum class Form { Brute, Alternating, Positive, Product };

Variant to_variant(KrVariant v);
KrVariant to_kr_variant(Variant v);
Form parse_form(const std::string& name);

struct GenFunSpec {
  Variant variant = Variant::KR1;
  Form form = Form::Alternating;
  int max_q = 40;
  int max_t = 12;
};

// Product form of a KR variant is the t = 1 series (max_t = 0); for H it is
// the bivariate product. H has no alternating form.
BiSeries evaluate(const GenFunSpec& spec);

BiSeries kr_brute(KrVariant v, int max_q, int max_t);
BiSeries kr_alternating(KrVariant v, int max_q, int max_t);
BiSeries kr_positive(KrVariant v, int max_q, int max_t);

BiSeries h_brute(int max_q, int max_t);
BiSeries h_product(int max_q, int max_t);
BiSeries h_positive(int max_q, int max_t);

enum class ProductDisplay { Primary, Alternate };
BiSeries product_side(KrVariant v, int max_q, ProductDisplay display = ProductDisplay::Primary);

struct Mismatch {
  int n = 0;
  int m = 0;
  Integer a;
  Integer b;
};

struct ComparisonReport {
  int max_q = 0;
  int max_t = 0;
  std::vector<Mismatch> mismatches;
  bool equal() const { return mismatches.empty(); }
  std::string to_string() const;
};

ComparisonReport compare(const BiSeries& a, const BiSeries& b);

// First (n, m) with a negative coefficient, if any.
std::optional<std::pair<int, int>> first_negative(const BiSeries& a);

}  // namespace qpart
