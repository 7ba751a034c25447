#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qpartition/qpoly.hpp"

namespace qpart {

struct AppendixRange {
  int m1, m2, m3, lo, hi;
};

struct AppendixEntry {
  int m1, m2, m3, s;
  QPoly printed;
  std::optional<QPoly> erratum;

  const QPoly& expected() const { return erratum ? *erratum : printed; }
};

struct AppendixTable {
  std::vector<AppendixRange> ranges;
  std::vector<AppendixEntry> entries;
};

AppendixTable parse_appendix(std::string_view text);
// The table compiled into the library from data/appendix_p.txt.
std::string_view embedded_appendix_text();
const AppendixTable& embedded_appendix();

}  // namespace qpart
