#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace opinfo {

enum class TheoryId { classical, quantum, boxworld };

std::string to_string(TheoryId id);

/// Shape mismatch between operands (systems, coordinate lengths).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A composite the toolkit does not model (squit with squit, squit with quantum).
class UnsupportedComposition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A requested operation exists in the framework but has no construction here.
class UnsupportedFeature : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a precondition (not a state, not pure, bad partition, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Residual allowed for sum-to-unit and cone-membership checks.
inline constexpr double kSumTolerance = 1e-9;

/// One elementary system. `size` is the alphabet size (classical), the
/// Hilbert-space dimension (quantum) and is fixed to 2 for the squit.
struct Factor {
  TheoryId theory = TheoryId::classical;
  int size = 1;

  int linear_dim() const;
  bool trivial() const { return linear_dim() == 1; }
  std::string to_string() const;
  bool operator==(const Factor&) const = default;
};

/// A system as the ordered list of its elementary factors. Composite
/// coordinates are ordered lexicographically over the factors, first factor
/// most significant. Factors of linear dimension 1 (the trivial system) are
/// dropped on composition, so A (x) I == A.
class SystemLabel {
 public:
  static SystemLabel classical(int d);
  static SystemLabel quantum(int d);
  static SystemLabel squit();
  static SystemLabel trivial();
  static SystemLabel from_factors(std::vector<Factor> factors);

  /// Throws UnsupportedComposition for squit (x) squit and squit (x) quantum.
  static SystemLabel compose(const SystemLabel& a, const SystemLabel& b);
  static SystemLabel power(const SystemLabel& a, int n);

  TheoryId theory() const { return theory_; }
  int dim() const { return dim_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_atomic() const { return factors_.size() == 1; }
  bool is_trivial() const { return dim_ == 1; }

  /// True when every factor is classical (the whole system is a simplex).
  bool all_classical() const;
  /// True when every factor is quantum.
  bool all_quantum() const;

  /// Hilbert dimension of an all-quantum label.
  int hilbert_dim() const;

  /// Label of the factors following `prefix`; throws DimensionError if
  /// `prefix` is not a leading run of this label's factors.
  SystemLabel strip_prefix(const SystemLabel& prefix) const;

  std::string to_string() const;
  bool operator==(const SystemLabel& other) const { return factors_ == other.factors_; }

 private:
  explicit SystemLabel(std::vector<Factor> factors);

  std::vector<Factor> factors_;
  TheoryId theory_ = TheoryId::classical;
  int dim_ = 1;
};

}  // namespace opinfo
