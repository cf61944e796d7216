#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sft {

using BigInt = boost::multiprecision::cpp_int;

// Natural logarithm of a positive integer of any size; -inf for zero.
double log_of(const BigInt& value);

std::string to_decimal(const BigInt& value);

BigInt ipow(const BigInt& base, unsigned exponent);

}  // namespace sft
