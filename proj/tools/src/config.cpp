#include "opinfo_cli/config.hpp"

#include <cmath>
#include <sstream>

#include "opinfo/theories.hpp"

namespace opinfo::cli {

namespace {

std::vector<double> parse_numbers(const std::string& text, const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("state spec '" + spec + "': '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw UsageError("state spec '" + spec + "': no numbers");
  return out;
}

bool is_squit(const SystemLabel& s) { return s.is_atomic() && s.theory() == TheoryId::boxworld; }

void expect(bool ok, const std::string& spec, const std::string& what) {
  if (!ok) throw UsageError("state spec '" + spec + "': " + what);
}

}  // namespace

SearchConfig ExperimentConfig::search() const {
  SearchConfig s;
  s.restarts = restarts;
  s.max_evals = max_evals;
  s.seed = seed;
  try {
    s.validate();
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  return s;
}

nlohmann::ordered_json ExperimentConfig::echo() const {
  nlohmann::ordered_json j;
  j["subcommand"] = subcommand;
  j["theory"] = theory;
  j["state"] = state;
  j["state2"] = state2;
  j["family"] = family;
  j["N"] = N;
  j["eps"] = eps;
  j["seed"] = seed;
  j["restarts"] = restarts;
  j["max_evals"] = max_evals;
  j["trials"] = trials;
  j["out"] = out;
  j["format"] = format;
  j["suite"] = suites;
  j["inject_fault"] = inject_fault;
  return j;
}

namespace {

StateVec build_state(const SystemLabel& system, const std::string& spec) {
  if (!system.is_atomic()) throw UsageError("state specs are defined for atomic systems only");
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool quantum = system.all_quantum();
  const bool classical = system.all_classical();
  const int d = quantum ? system.hilbert_dim() : system.dim();

  StateVec s{system, Vec()};
  if (head == "pure") {
    if (is_squit(system)) {
      s = squit_state(1.0, 1.0);
    } else if (quantum) {
      s = quantum_pure_state(CVec::Unit(d, 0));
    } else {
      s = {system, Vec::Unit(d, 0)};
    }
  } else if (head == "maxmixed" || head == "center") {
    if (is_squit(system)) {
      s = squit_state(0.0, 0.0);
    } else {
      expect(head == "maxmixed", spec, "'center' is a squit preset");
      s = quantum ? quantum_state(CMat::Identity(d, d) / static_cast<double>(d))
                  : StateVec{system, Vec::Constant(d, 1.0 / d)};
    }
  } else if (head == "plus") {
    expect(quantum && d == 2, spec, "'plus' is a qubit preset");
    s = quantum_pure_state(CVec::Constant(2, Complex(1.0 / std::sqrt(2.0), 0.0)));
  } else if (head == "diag") {
    expect(classical || quantum, spec, "'diag' needs a classical or quantum system");
    const auto p = parse_numbers(tail, spec);
    expect(static_cast<int>(p.size()) == d, spec, "expected " + std::to_string(d) + " entries");
    const Vec v = Eigen::Map<const Vec>(p.data(), d);
    s = quantum ? quantum_state(v.cast<Complex>().asDiagonal()) : StateVec{system, v};
  } else if (head == "bloch") {
    expect(quantum && d == 2, spec, "'bloch' is a qubit spec");
    const auto r = parse_numbers(tail, spec);
    expect(r.size() == 3, spec, "expected x,y,z");
    CMat m(2, 2);
    m << Complex(1.0 + r[2], 0.0), Complex(r[0], -r[1]), Complex(r[0], r[1]), Complex(1.0 - r[2], 0.0);
    s = quantum_state(m / 2.0);
  } else if (head == "xy") {
    expect(is_squit(system), spec, "'xy' is a squit spec");
    const auto r = parse_numbers(tail, spec);
    expect(r.size() == 2, spec, "expected x,y");
    s = squit_state(r[0], r[1]);
  } else if (head == "coords") {
    const auto c = parse_numbers(tail, spec);
    expect(static_cast<int>(c.size()) == system.dim(), spec,
           "expected " + std::to_string(system.dim()) + " coordinates");
    s = {system, Eigen::Map<const Vec>(c.data(), system.dim())};
  } else {
    throw UsageError("unknown state spec '" + spec + "'");
  }
  expect(is_normalized_state(s), spec, "not a normalized state of " + system.to_string());
  return s;
}

}  // namespace

StateVec parse_state_spec(const SystemLabel& system, const std::string& spec) {
  try {
    return build_state(system, spec);
  } catch (const ValidationError& e) {
    throw UsageError("state spec '" + spec + "': " + e.what());
  } catch (const DimensionError& e) {
    throw UsageError("state spec '" + spec + "': " + e.what());
  }
}

}  // namespace opinfo::cli
