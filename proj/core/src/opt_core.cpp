#include "opinfo/opt_core.hpp"

#include <cmath>
#include <set>

#include "internal.hpp"

namespace opinfo {

namespace {

Vec atomic_unit(const Factor& f) {
  switch (f.theory) {
    case TheoryId::classical: return Vec::Ones(f.size);
    case TheoryId::quantum: {
      Vec u = Vec::Zero(f.size * f.size);
      u(0) = std::sqrt(static_cast<double>(f.size));
      return u;
    }
    case TheoryId::boxworld: return Vec::Unit(3, 2);
  }
  return {};
}

void require_same(const SystemLabel& a, const SystemLabel& b, const char* what) {
  if (!(a == b)) {
    throw DimensionError(std::string(what) + ": system mismatch " + a.to_string() + " vs " + b.to_string());
  }
}

void require_size(const SystemLabel& s, const Vec& v, const char* what) {
  if (v.size() != s.dim()) throw DimensionError(std::string(what) + ": coordinate length mismatch");
}

}  // namespace

double StateVec::normalization() const { return unit_effect(system).coords.dot(coords); }

StateVec Ensemble::total() const {
  StateVec sum = zero_state(system);
  for (const auto& m : members) sum = sum + m;
  return sum;
}

std::vector<double> Ensemble::weights() const {
  std::vector<double> w;
  w.reserve(members.size());
  for (const auto& m : members) w.push_back(m.normalization());
  return w;
}

EffectVec unit_effect(const SystemLabel& system) {
  Vec u = Vec::Ones(1);
  for (const auto& f : system.factors()) u = kron(u, atomic_unit(f));
  return {system, u};
}

StateVec zero_state(const SystemLabel& system) { return {system, Vec::Zero(system.dim())}; }

ChannelMat identity_channel(const SystemLabel& system) {
  return {system, system, Mat::Identity(system.dim(), system.dim()), true};
}

double pair(const EffectVec& a, const StateVec& s) {
  require_same(a.system, s.system, "pair");
  require_size(a.system, a.coords, "pair");
  require_size(s.system, s.coords, "pair");
  return a.coords.dot(s.coords);
}

ChannelMat compose_seq(const ChannelMat& first, const ChannelMat& second) {
  require_same(first.out, second.in, "compose_seq");
  return {first.in, second.out, second.matrix * first.matrix, first.deterministic && second.deterministic};
}

StateVec compose_par(const StateVec& x, const StateVec& y) {
  return {SystemLabel::compose(x.system, y.system), kron(x.coords, y.coords)};
}

EffectVec compose_par(const EffectVec& x, const EffectVec& y) {
  return {SystemLabel::compose(x.system, y.system), kron(x.coords, y.coords)};
}

ChannelMat compose_par(const ChannelMat& x, const ChannelMat& y) {
  return {SystemLabel::compose(x.in, y.in), SystemLabel::compose(x.out, y.out), kron(x.matrix, y.matrix),
          x.deterministic && y.deterministic};
}

StateVec apply(const ChannelMat& c, const StateVec& s) {
  require_same(c.in, s.system, "apply");
  return {c.out, c.matrix * s.coords};
}

StateVec apply_local(const ChannelMat& c, const StateVec& s) {
  return apply_at(c, s, SystemLabel::trivial());
}

StateVec apply_at(const ChannelMat& c, const StateVec& s, const SystemLabel& before) {
  const SystemLabel head = SystemLabel::compose(before, c.in);
  const SystemLabel after = s.system.strip_prefix(head);
  if (!before.is_trivial()) s.system.strip_prefix(before);
  const SystemLabel out = SystemLabel::compose(SystemLabel::compose(before, c.out), after);
  return {out, apply_on_block(c.matrix, s.coords, before.dim(), after.dim())};
}

EffectVec pullback(const EffectVec& a, const ChannelMat& c) {
  require_same(a.system, c.out, "pullback");
  return {c.in, c.matrix.transpose() * a.coords};
}

StateVec apply_effect_on_tail(const StateVec& s, const EffectVec& b) {
  const auto& f = s.system.factors();
  const auto& tail = b.system.factors();
  if (b.system.is_trivial()) return {s.system, s.coords * b.coords(0)};
  if (tail.size() > f.size() || !std::equal(tail.rbegin(), tail.rend(), f.rbegin())) {
    throw DimensionError("apply_effect_on_tail: " + b.system.to_string() + " is not a trailing factor of " +
                         s.system.to_string());
  }
  const SystemLabel head = SystemLabel::from_factors(std::vector<Factor>(f.begin(), f.end() - static_cast<long>(tail.size())));
  const int db = b.system.dim();
  Eigen::Map<const Mat> view(s.coords.data(), db, head.dim());  // column j = head index j
  return {head, view.transpose() * b.coords};
}

StateVec marginalize(const DilationState& d) {
  const SystemLabel anc = d.ancilla();
  StateVec m = apply_effect_on_tail(d.joint, unit_effect(anc));
  m.system = d.marginal_system;
  return m;
}

StateVec operator+(const StateVec& a, const StateVec& b) {
  require_same(a.system, b.system, "state sum");
  return {a.system, a.coords + b.coords};
}

StateVec operator-(const StateVec& a, const StateVec& b) {
  require_same(a.system, b.system, "state difference");
  return {a.system, a.coords - b.coords};
}

StateVec operator*(double w, const StateVec& s) { return {s.system, w * s.coords}; }

EffectVec operator+(const EffectVec& a, const EffectVec& b) {
  require_same(a.system, b.system, "effect sum");
  return {a.system, a.coords + b.coords};
}

EffectVec operator*(double w, const EffectVec& a) { return {a.system, w * a.coords}; }

TestReport validate_test(const ObservationTest& t) {
  TestReport report;
  Vec sum = Vec::Zero(t.system.dim());
  for (const auto& e : t.effects) {
    bool ok = e.system == t.system && e.coords.size() == t.system.dim() && is_effect(e);
    report.effect_valid.push_back(ok);
    if (!ok) {
      report.valid = false;
      report.message = "effect outside the effect set";
    }
    if (e.coords.size() == sum.size()) sum += e.coords;
  }
  report.sum_residual = (sum - unit_effect(t.system).coords).cwiseAbs().maxCoeff();
  if (report.sum_residual > kSumTolerance) {
    report.valid = false;
    report.message = "effects do not sum to the unit effect";
  }
  if (t.effects.empty()) {
    report.valid = false;
    report.message = "empty test";
  }
  return report;
}

TestReport validate_combined(std::span<const EffectVec> effects, const ObservationTest& ancilla_test) {
  TestReport report = validate_test(ancilla_test);
  if (!report.valid) return report;
  if (effects.size() != ancilla_test.effects.size()) {
    report.valid = false;
    report.message = "one effect per ancilla outcome required";
    return report;
  }
  EffectVec combined = compose_par(effects[0], ancilla_test.effects[0]);
  for (size_t i = 1; i < effects.size(); ++i) {
    combined = combined + compose_par(effects[i], ancilla_test.effects[i]);
  }
  const bool ok = is_effect(combined);
  report.effect_valid = {ok};
  if (!ok) {
    report.valid = false;
    report.message = "combined effect outside the effect set";
  }
  return report;
}

ObservationTest coarse_grain(const ObservationTest& t, const std::vector<std::vector<int>>& partition) {
  std::set<int> seen;
  ObservationTest out{t.system, {}};
  for (const auto& block : partition) {
    EffectVec e{t.system, Vec::Zero(t.system.dim())};
    for (int idx : block) {
      if (idx < 0 || static_cast<size_t>(idx) >= t.effects.size()) {
        throw ValidationError("coarse_grain: index out of range");
      }
      if (!seen.insert(idx).second) throw ValidationError("coarse_grain: overlapping blocks");
      e.coords += t.effects[static_cast<size_t>(idx)].coords;
    }
    out.effects.push_back(std::move(e));
  }
  if (seen.size() != t.effects.size()) throw ValidationError("coarse_grain: partition misses outcomes");
  return out;
}

}  // namespace opinfo
