#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace twistk {

// All arithmetic in this library is exact; Int never overflows.
using Int = boost::multiprecision::cpp_int;

}  // namespace twistk
