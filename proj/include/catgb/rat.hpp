#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "catgb/errors.hpp"

namespace catgb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

inline Int ipow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

// Stirling numbers of the second kind, S(m, n).
inline Int stirling2(unsigned m, unsigned n) {
  if (n > m) return 0;
  if (m == 0) return n == 0 ? 1 : 0;
  if (n == 0) return 0;
  // S(m, n) = n*S(m-1, n) + S(m-1, n-1)
  std::vector<Int> row(n + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = std::min(i, n); j >= 1; --j) row[j] = Int(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[n];
}

inline std::string rat_to_string(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("malformed rational: " + s);
  }
}

}  // namespace catgb
