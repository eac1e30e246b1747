#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace orbitlab {

// Exact arbitrary-precision integers and rationals. Everything arithmetic in
// this library is carried in these; machine floats only ever appear as
// logarithms of exact quantities.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::pow;

// Number of bits in |n|; 0 for n == 0.
inline unsigned bit_length(const Int& n) {
  return n == 0 ? 0u : static_cast<unsigned>(boost::multiprecision::msb(abs(n))) + 1u;
}

// Strict decimal parser: optional leading '-', then digits. Throws ParseError.
Int parse_bigint(std::string_view text);

inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace orbitlab
