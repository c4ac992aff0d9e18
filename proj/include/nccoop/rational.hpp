#ifndef NCCOOP_RATIONAL_HPP
#define NCCOOP_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "nccoop/errors.hpp"

namespace nccoop {

/// Exact rational scalar. Always normalized: lowest terms, positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

namespace detail {

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline Int parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s));
}

}  // namespace detail

/// Parses "p/q" or "p". Rejects zero denominators and anything else.
inline Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!detail::is_integer_literal(num_text))
    throw parse_error("malformed rational '" + std::string(text) + "'");
  Int num = detail::parse_int(num_text);
  Int den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!detail::is_integer_literal(den_text))
      throw parse_error("malformed rational '" + std::string(text) + "'");
    den = detail::parse_int(den_text);
    if (den == 0)
      throw parse_error("zero denominator in rational '" + std::string(text) + "'");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

/// Renders as "p/q" with q >= 1, e.g. "0/1", "-3/2".
inline std::string format_rat(const Rat& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace nccoop

#endif  // NCCOOP_RATIONAL_HPP
