#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace pinlab {

using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& s);

std::string rational_to_string(const Rational& r);

double to_double(const Rational& r);

// Nearest rational on the grid k / max_denominator.
Rational snap_rational(double x, long long max_denominator = 1000000);

std::vector<Rational> snap_rational(const std::vector<double>& x,
                                    long long max_denominator = 1000000);

}  // namespace pinlab
