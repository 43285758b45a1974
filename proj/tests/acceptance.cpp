// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "opinfo/compression.hpp"
#include "opinfo/entropy.hpp"
#include "opinfo_cli/app.hpp"
#include "opinfo_cli/suites.hpp"

using namespace opinfo;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome from_suite(const std::string& name, int trials) {
  cli::SuiteOptions o;
  o.seed = 1;
  o.trials = trials;
  const auto r = cli::run_suite(name, o);
  return {r.passed(), name + ": " + std::to_string(r.violations) + " violations in " + std::to_string(r.trials) +
                          " checks, worst residual " + fmt("%.3g", r.worst_residual)};
}

StateVec bit(double p1) {
  const double p[] = {1.0 - p1, p1};
  return classical_state(p);
}

Outcome shannon_rate() {
  const auto t0 = Clock::now();
  std::ostringstream out, err;
  const int code = cli::run({"rates", "--theory", "classical:2", "--state", "diag:0.89,0.11", "--N", "1000", "--eps",
                             "0.05", "--family", "typical"},
                            out, err);
  const double dt = seconds_since(t0);
  double rate = std::nan("");
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find(",1000,") == std::string::npos || line.find(",rate,") == std::string::npos) continue;
    const auto at = line.find(",rate,") + 6;
    rate = std::stod(line.substr(at, line.find(',', at) - at));
  }
  const bool ok = code == 0 && rate >= 0.47 && rate <= 0.56 && dt < 10.0;
  return {ok, fmt("rate %.4f (H2(0.11) = %.4f), %.3f s", rate, binary_entropy(0.11), dt)};
}

Outcome shannon_converse() {
  const auto t0 = Clock::now();
  const double err = typical_set_error(bit(0.11).coords, 1000, 450);
  const double dt = seconds_since(t0);
  // multiprecision binomial tail computed independently
  const double oracle = 0.92775409208708856;
  const bool ok = err > 0.5 && std::abs(err - oracle) < 1e-9 && dt < 1.0;
  return {ok, fmt("error %.6f (oracle %.6f), %.3f s", err, oracle, dt)};
}

Outcome schumacher_trend() {
  const auto t0 = Clock::now();
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = 0.9;
  m(1, 1) = 0.1;
  const auto rho = quantum_state(m);
  std::vector<double> rates;
  std::string detail = "rates";
  for (int n : {8, 10, 12, 14}) {
    const auto r = rate_search(rho, n, 0.1, RateFamily::typical);
    rates.push_back(r.M ? static_cast<double>(*r.M) / n : std::nan(""));
    detail += fmt(" N=%.0f:%.4f", n, rates.back());
  }
  const double dt = seconds_since(t0);
  bool mono = true;
  for (size_t i = 0; i + 1 < rates.size(); ++i) mono = mono && rates[i + 1] <= rates[i];
  const bool near = std::abs(rates.back() - 0.47) <= 0.15;
  detail += fmt("; S = %.4f; nonincreasing %.0f, N=14 within 0.47+-0.15 %.0f", von_neumann(rho), mono, near);
  detail += fmt(", %.3f s", dt);
  return {mono && near && dt < 60.0, detail};
}

Outcome zero_rate_pure() { return from_suite("measure_prepare", 100); }

Outcome fuchs() { return from_suite("fuchs", 1000); }
Outcome bridges() { return from_suite("bridges", 100); }
Outcome subadditivity() { return from_suite("subadditivity", 100); }
Outcome reversible() { return from_suite("reversible", 100); }

Outcome purity_chain() {
  const auto sweep = from_suite("purity", 100);
  const SearchConfig cfg{2, 400, 1, 1e-10};
  const auto s = bit(0.25);
  const double i0 = state_information(s, cfg).value;
  const double bound = ic_lower_bound(i0, obit_dim_log(*classical_theory(2)));
  const auto r = rate_search(s, 1000, 0.05, RateFamily::typical);
  const double rate = r.M ? static_cast<double>(*r.M) / 1000.0 : std::nan("");
  const bool tight = std::abs(bound - 0.8112781244591328) < 1e-4 && std::abs(rate - bound) <= 0.06;
  return {sweep.pass && tight, sweep.detail + fmt("; tight case bound %.4f, rate %.4f", bound, rate)};
}

Outcome error_identity() {
  const auto t0 = Clock::now();
  auto o = from_suite("error_identity", 1000);
  const double dt = seconds_since(t0);
  o.pass = o.pass && dt < 1.0;
  o.detail += fmt(", %.3f s", dt);
  return o;
}

Outcome continuity() { return from_suite("continuity", 1000); }
Outcome steering() { return from_suite("steering", 100); }

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Shannon rate recovery", shannon_rate},
      {"Shannon converse", shannon_converse},
      {"Schumacher trend", schumacher_trend},
      {"zero-rate pure states", zero_rate_pure},
      {"generalized Fuchs-van de Graaf", fuchs},
      {"fidelity/dilation bridges", bridges},
      {"subadditivity construction", subadditivity},
      {"reversible invariance", reversible},
      {"purity detection chain", purity_chain},
      {"classical error-probability identity", error_identity},
      {"continuity bound", continuity},
      {"steering certificates", steering},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
