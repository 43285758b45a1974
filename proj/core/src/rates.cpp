#include <algorithm>
#include <cmath>
#include <functional>

#include "internal.hpp"
#include "opinfo/compression.hpp"
#include "typeclass.hpp"

namespace opinfo {

namespace {

Vec source_spectrum(const StateVec& rho) {
  if (!is_normalized_state(rho)) throw ValidationError("rate search: source is not a normalized state");
  if (rho.system.all_classical() && rho.system.is_atomic()) return rho.coords;
  if (rho.system.all_quantum() && rho.system.is_atomic()) {
    Vec eig = hermitian_eigen(density_matrix(rho)).values.reverse();
    for (int i = 0; i < eig.size(); ++i) eig(i) = std::max(0.0, eig(i));
    return eig / eig.sum();
  }
  throw UnsupportedFeature("rate search needs an atomic classical or quantum source, got " + rho.system.to_string());
}

// Mass of the 2^M most probable products, by explicit enumeration.
double enumerated_mass(const Vec& p, int N, int M, bool quantum) {
  const int d = static_cast<int>(p.size());
  if (quantum ? N > 14 : N * std::log2(static_cast<double>(d)) > 20.0 + 1e-9) {
    throw UnsupportedFeature("all_projective enumeration is capped at N <= 14 (quantum) and d^N <= 2^20 (classical)");
  }
  long long total = 1;
  for (int i = 0; i < N; ++i) total *= d;
  std::vector<long double> prob(static_cast<size_t>(total));
  std::vector<int> counts(static_cast<size_t>(d));
  for (long long x = 0; x < total; ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    long long rest = x;
    for (int k = 0; k < N; ++k) {
      ++counts[static_cast<size_t>(rest % d)];
      rest /= d;
    }
    prob[static_cast<size_t>(x)] = detail::sequence_probability(p, counts);
  }
  std::sort(prob.begin(), prob.end(), std::greater<>());
  const long long keep = M >= 62 ? total : std::min<long long>(total, 1LL << M);
  long double mass = 0.0L;
  for (long long i = 0; i < keep; ++i) mass += prob[static_cast<size_t>(i)];
  return static_cast<double>(std::min(mass, 1.0L));
}

}  // namespace

int max_code_length(const SystemLabel& source, int N) {
  const double d = source.all_quantum() ? source.hilbert_dim() : source.dim();
  return static_cast<int>(std::ceil(N * std::log2(d) - 1e-9));
}

std::string to_string(RateFamily f) {
  switch (f) {
    case RateFamily::typical: return "typical";
    case RateFamily::all_projective: return "all_projective";
    case RateFamily::measure_prepare: return "measure_prepare";
  }
  return "typical";
}

RateFamily parse_rate_family(const std::string& s) {
  if (s == "typical") return RateFamily::typical;
  if (s == "all_projective") return RateFamily::all_projective;
  if (s == "measure_prepare") return RateFamily::measure_prepare;
  throw ValidationError("unknown scheme family '" + s + "'");
}

double family_fidelity(const StateVec& rho, int N, int M, RateFamily family) {
  if (N < 1 || M < 0) throw ValidationError("family_fidelity: need N >= 1 and M >= 0");
  const Vec p = source_spectrum(rho);
  const bool quantum = rho.system.all_quantum();
  const int m = std::min(M, max_code_length(rho.system, N));
  double mass = 1.0;
  switch (family) {
    case RateFamily::typical:
      mass = quantum ? typical_mass(p, N, m) : 1.0 - typical_set_error(p, N, m);
      break;
    case RateFamily::all_projective:
      mass = enumerated_mass(p, N, m, quantum);
      break;
    case RateFamily::measure_prepare:
      // discarding everything and preparing the most likely pure state
      return std::pow(p.maxCoeff(), 2.0 * N);
  }
  return mass * mass;
}

RateResult rate_search(const StateVec& rho, int N, double eps, RateFamily family) {
  if (!(eps > 0.0)) throw ValidationError("rate_search: eps must be positive");
  if (N < 1) throw ValidationError("rate_search: N must be >= 1");
  RateResult out;
  auto accepted = [&](int m, double& fid) {
    fid = family_fidelity(rho, N, m, family);
    return fid > 1.0 - eps;
  };
  double fid = 0.0;
  if (family == RateFamily::measure_prepare) {
    if (accepted(0, fid)) out.M = 0;
    out.acceptance = fid;
    return out;
  }
  int lo = 0;
  int hi = max_code_length(rho.system, N);
  if (!accepted(hi, fid)) {
    out.acceptance = fid;
    return out;
  }
  double hi_fid = fid;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (accepted(mid, fid)) {
      hi = mid;
      hi_fid = fid;
    } else {
      lo = mid + 1;
    }
  }
  out.M = hi;
  out.acceptance = hi_fid;
  return out;
}

RateTable estimate_info_content(const StateVec& rho, std::span<const int> Ns, std::span<const double> epss,
                                RateFamily family) {
  if (Ns.empty() || epss.empty()) throw ValidationError("estimate_info_content: empty N or eps list");
  RateTable table;
  table.family = family;
  const int n_max = *std::max_element(Ns.begin(), Ns.end());
  const double eps_min = *std::min_element(epss.begin(), epss.end());
  for (int n : Ns) {
    for (double e : epss) {
      const auto r = rate_search(rho, n, e, family);
      RateRow row{n, e, r.M, r.acceptance};
      if (n == n_max && e == eps_min) table.summary = row;
      table.rows.push_back(row);
    }
  }
  return table;
}

}  // namespace opinfo
