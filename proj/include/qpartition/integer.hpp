#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qpart {

using Integer = boost::multiprecision::cpp_int;

}  // namespace qpart
