#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ncrw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(long long n, long long k);

// Canonical lossless form "num/den", e.g. "1/2", "-3/4", "2/1".
std::string to_fraction_string(const Rational& r);
Rational parse_fraction(const std::string& s);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace ncrw
