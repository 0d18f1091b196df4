#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dbc {

// Coefficients are exact integers throughout; the identities being checked
// are exact, so no floating point anywhere in the arithmetic core.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace dbc
