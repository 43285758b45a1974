#include "opinfo/system.hpp"

#include <algorithm>

namespace opinfo {

std::string to_string(TheoryId id) {
  switch (id) {
    case TheoryId::classical: return "classical";
    case TheoryId::quantum: return "quantum";
    case TheoryId::boxworld: return "squit";
  }
  return "unknown";
}

int Factor::linear_dim() const {
  switch (theory) {
    case TheoryId::classical: return size;
    case TheoryId::quantum: return size * size;
    case TheoryId::boxworld: return 3;
  }
  return 0;
}

std::string Factor::to_string() const {
  if (theory == TheoryId::boxworld) return "squit";
  return opinfo::to_string(theory) + ":" + std::to_string(size);
}

SystemLabel::SystemLabel(std::vector<Factor> factors) : factors_(std::move(factors)) {
  int squits = 0;
  bool quantum = false;
  dim_ = 1;
  for (const auto& f : factors_) {
    if (f.size < 1) throw DimensionError("factor size must be positive");
    if (f.theory == TheoryId::boxworld) ++squits;
    if (f.theory == TheoryId::quantum) quantum = true;
    dim_ *= f.linear_dim();
  }
  if (squits > 1) throw UnsupportedComposition("squit (x) squit composites are not modelled");
  if (squits == 1 && quantum) throw UnsupportedComposition("squit (x) quantum composites are not modelled");
  theory_ = squits ? TheoryId::boxworld : quantum ? TheoryId::quantum : TheoryId::classical;
}

SystemLabel SystemLabel::classical(int d) {
  if (d < 1) throw DimensionError("classical dimension must be >= 1");
  return SystemLabel({Factor{TheoryId::classical, d}});
}

SystemLabel SystemLabel::quantum(int d) {
  if (d < 1) throw DimensionError("quantum dimension must be >= 1");
  if (d == 1) return trivial();
  return SystemLabel({Factor{TheoryId::quantum, d}});
}

SystemLabel SystemLabel::squit() { return SystemLabel({Factor{TheoryId::boxworld, 2}}); }

SystemLabel SystemLabel::trivial() { return SystemLabel({Factor{TheoryId::classical, 1}}); }

SystemLabel SystemLabel::from_factors(std::vector<Factor> factors) {
  std::erase_if(factors, [](const Factor& f) { return f.trivial(); });
  if (factors.empty()) return trivial();
  return SystemLabel(std::move(factors));
}

SystemLabel SystemLabel::compose(const SystemLabel& a, const SystemLabel& b) {
  std::vector<Factor> all = a.factors_;
  all.insert(all.end(), b.factors_.begin(), b.factors_.end());
  return from_factors(std::move(all));
}

SystemLabel SystemLabel::power(const SystemLabel& a, int n) {
  if (n < 1) throw DimensionError("block length must be >= 1");
  SystemLabel out = a;
  for (int i = 1; i < n; ++i) out = compose(out, a);
  return out;
}

bool SystemLabel::all_classical() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.theory == TheoryId::classical; });
}

bool SystemLabel::all_quantum() const {
  if (is_trivial()) return true;
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.theory == TheoryId::quantum; });
}

int SystemLabel::hilbert_dim() const {
  if (!all_quantum()) throw DimensionError("hilbert_dim on a non-quantum system " + to_string());
  int d = 1;
  for (const auto& f : factors_) d *= f.theory == TheoryId::quantum ? f.size : 1;
  return d;
}

SystemLabel SystemLabel::strip_prefix(const SystemLabel& prefix) const {
  if (prefix.is_trivial()) return *this;
  const auto& p = prefix.factors_;
  if (p.size() > factors_.size() || !std::equal(p.begin(), p.end(), factors_.begin())) {
    throw DimensionError(prefix.to_string() + " is not a leading factor of " + to_string());
  }
  return from_factors(std::vector<Factor>(factors_.begin() + static_cast<long>(p.size()), factors_.end()));
}

std::string SystemLabel::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "*";
    out += f.to_string();
  }
  return out;
}

}  // namespace opinfo
