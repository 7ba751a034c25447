#include "qpartition/appendix.hpp"

#include <sstream>
#include <string>

#include "appendix_data.hpp"
#include "qpartition/error.hpp"

namespace qpart {

AppendixTable parse_appendix(std::string_view text) {
  AppendixTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto bad = [&]() { return InvalidInput("appendix line " + std::to_string(lineno) + ": " + line); };
    int a, b, c, d;
    if (!(ls >> a >> b >> c >> d)) throw bad();
    if (kind == "range") {
      int hi;
      if (!(ls >> hi)) throw bad();
      t.ranges.push_back({a, b, c, d, hi});
      continue;
    }
    std::string poly;
    std::getline(ls, poly);
    if (poly.find_first_not_of(" \t") == std::string::npos) throw bad();
    if (kind == "poly") {
      t.entries.push_back({a, b, c, d, QPoly::parse(poly), std::nullopt});
    } else if (kind == "erratum") {
      bool found = false;
      for (auto& e : t.entries)
        if (e.m1 == a && e.m2 == b && e.m3 == c && e.s == d) {
          e.erratum = QPoly::parse(poly);
          found = true;
        }
      if (!found) throw bad();
    } else {
      throw bad();
    }
  }
  return t;
}

std::string_view embedded_appendix_text() { return kAppendixText; }

const AppendixTable& embedded_appendix() {
  static const AppendixTable table = parse_appendix(kAppendixText);
  return table;
}

}  // namespace qpart
