#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rootcast {

// Arbitrary-precision integers for subgraph counts (a star on k leaves has
// 2^k subtrees through the center, so 64 bits run out fast) and exact
// rationals for the parametric potential family.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "3", "-1/2", "0.25", "2.5e-1" into an exact rational.
Rat parse_rational(const std::string& text);

// Decimal rendering with up to `digits` significant digits (exact when the
// value terminates earlier).  Used for human-facing rational output.
std::string rat_to_string(const Rat& r, int digits = 12);

// log2 of a positive big integer, good to double precision.
double log2_bigint(const BigInt& v);

// Deterministic splitmix64 step; used to derive independent per-item seeds.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace rootcast
