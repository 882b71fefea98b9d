#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thickening {

/// Arbitrary-precision signed integer used for every count and length.
using BigInt = boost::multiprecision::cpp_int;

/// Reduced rational with positive denominator and the sign carried by the numerator.
using ExactRatio = boost::multiprecision::cpp_rational;

/// Raised when an exact division that must be integral leaves a remainder.
/// Indicates a transcription error in a closed form, never bad user input.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_decimal(const BigInt& value) { return value.str(); }

inline BigInt numerator(const ExactRatio& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const ExactRatio& r) { return boost::multiprecision::denominator(r); }

/// Returns r as an integer; throws IntegralityError naming `what` otherwise.
BigInt require_integral(const ExactRatio& r, const char* what);

}  // namespace thickening
