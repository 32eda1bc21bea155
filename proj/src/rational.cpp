#include "pinlab/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace pinlab {

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(boost::multiprecision::cpp_int(s));
    }
    boost::multiprecision::cpp_int p(s.substr(0, slash));
    boost::multiprecision::cpp_int q(s.substr(slash + 1));
    if (q == 0) throw std::domain_error("rational with zero denominator: " + s);
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::domain_error("not a rational literal: '" + s + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational snap_rational(double x, long long max_denominator) {
  const double scaled = x * static_cast<double>(max_denominator);
  const long long num = static_cast<long long>(std::llround(scaled));
  return Rational(num, max_denominator);
}

std::vector<Rational> snap_rational(const std::vector<double>& x, long long max_denominator) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (double v : x) out.push_back(snap_rational(v, max_denominator));
  return out;
}

}  // namespace pinlab
