#pragma once

#include <stdexcept>

namespace qpart {

// Thrown for anything the caller got wrong: malformed partitions, windows,
// out-of-range queries, ill-formed seeds or decompositions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qpart
