#include "typeclass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opinfo/system.hpp"

namespace opinfo::detail {

namespace {

struct TypeClass {
  long double log_count = 0.0L;
  long double log_prob = 0.0L;  // per sequence; -inf for impossible types
};

void enumerate(const Vec& p, int letter, int left, long double log_count, long double log_prob,
               std::vector<TypeClass>& out) {
  const int d = static_cast<int>(p.size());
  if (letter == d - 1) {
    const long double lp = p(letter) > 0.0 ? left * std::log(static_cast<long double>(p(letter)))
                                           : (left > 0 ? -std::numeric_limits<long double>::infinity() : 0.0L);
    out.push_back({log_count - std::lgamma(static_cast<long double>(left) + 1.0L), log_prob + lp});
    if (out.size() > 20'000'000) throw UnsupportedFeature("too many type classes for an exact sum");
    return;
  }
  for (int k = left; k >= 0; --k) {
    const long double lp = p(letter) > 0.0 ? k * std::log(static_cast<long double>(p(letter)))
                                           : (k > 0 ? -std::numeric_limits<long double>::infinity() : 0.0L);
    enumerate(p, letter + 1, left - k, log_count - std::lgamma(static_cast<long double>(k) + 1.0L), log_prob + lp,
              out);
  }
}

long double integral_count(long double log_count) {
  const long double c = std::exp(log_count);
  return c < 9e18L ? static_cast<long double>(std::llround(c)) : c;
}

}  // namespace

long double sequence_probability(const Vec& p, const std::vector<int>& counts) {
  long double prob = 1.0L;
  for (size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) prob *= std::pow(static_cast<long double>(p(static_cast<int>(i))), counts[i]);
  }
  return prob;
}

long double excluded_mass(const Vec& p, int N, int M, bool whole_classes) {
  if (p.size() < 1 || p.minCoeff() < 0.0) throw ValidationError("source distribution must be nonnegative");
  if (N < 1 || M < 0) throw ValidationError("block length must be >= 1 and code length >= 0");
  std::vector<TypeClass> classes;
  enumerate(p, 0, N, std::lgamma(static_cast<long double>(N) + 1.0L), 0.0L, classes);
  std::stable_sort(classes.begin(), classes.end(),
                   [](const TypeClass& a, const TypeClass& b) { return a.log_prob > b.log_prob; });
  long double slots = std::ldexp(1.0L, M);
  long double excluded = 0.0L;
  bool closed = false;
  for (const auto& c : classes) {
    if (!std::isfinite(c.log_prob)) continue;
    const long double count = integral_count(c.log_count);
    long double left_out = count;
    if (!closed) {
      if (whole_classes) {
        if (count <= slots) {
          slots -= count;
          left_out = 0.0L;
        } else {
          closed = true;
        }
      } else {
        const long double taken = std::min(slots, count);
        slots -= taken;
        left_out = count - taken;
      }
    }
    if (left_out > 0.0L) excluded += std::exp(std::log(left_out) + c.log_prob);
  }
  return std::clamp(excluded, 0.0L, 1.0L);
}

}  // namespace opinfo::detail
