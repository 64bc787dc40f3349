#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace minkq {

// Exact arithmetic substrate for the whole toolkit. cpp_rational keeps every
// value in lowest terms with a positive denominator, which is the invariant
// the signature certificates rely on. No floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline int sign_of(const Rat& r) { return r.sign(); }

// Renders "p" when the denominator is 1, else "p/q". Together with
// rat_from_string this gives a bit-exact text round trip.
inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts an optionally signed integer or "p/q". Throws std::invalid_argument
// on malformed input or a zero denominator.
inline Rat rat_from_string(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw std::invalid_argument("not a rational: '" + s + "'");
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw std::invalid_argument("not a rational: '" + s + "'");
  Int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rat(Int(num), d);
}

}  // namespace minkq
