#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace uplogic {

// Exact arithmetic end to end: no floating point anywhere in the library.
// Rat keeps the canonical form denominator > 0, gcd(|num|, den) == 1,
// zero == 0/1; the backing type maintains it across all operations.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& q) { return numerator(q); }
inline BigInt rat_den(const Rat& q) { return denominator(q); }

// Builds num/den, throws Error on a zero denominator.
Rat rat_frac(const BigInt& num, const BigInt& den);

// Bits needed to write |v| in binary; 0 for v == 0.
std::size_t bit_length(const BigInt& v);

// Size ||a/b|| of a canonical rational: bit_length(|a|) + bit_length(b).
std::size_t coeff_bits(const Rat& q);

// "a" when the denominator is 1, otherwise "a/b".
std::string rat_str(const Rat& q);

// Accepts ["-"] int ["/" int]; nullopt on malformed text or zero denominator.
std::optional<Rat> rat_parse(std::string_view text);

}  // namespace uplogic
