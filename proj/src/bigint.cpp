#include "sft/bigint.hpp"

#include <cmath>
#include <limits>

namespace sft {

// GCC misreads the limb copy inside cpp_int's right shift as an overflow.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#pragma GCC diagnostic ignored "-Wstringop-overread"
#endif
double log_of(const BigInt& value)
{
    if (value <= 0) return -std::numeric_limits<double>::infinity();
    const auto bits = boost::multiprecision::msb(value);
    if (bits < 900) return std::log(value.convert_to<double>());
    // Keep the leading 64 bits; the dropped tail changes the log by < 2^-60.
    const auto shift = bits - 63;
    BigInt head = value >> shift;
    return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

}  // namespace sft
