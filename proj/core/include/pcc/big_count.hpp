#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pcc {

// Exact non-negative integer used for cardinalities and enumerative ranks.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigCount& v) { return v.str(); }

// "p/q" in lowest terms ("0/1" for zero).
std::string to_string(const BigRational& v);

}  // namespace pcc
