#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace young {

// All counts and determinants are exact; there is no overflow mode.
using Int = boost::multiprecision::cpp_int;

}  // namespace young
