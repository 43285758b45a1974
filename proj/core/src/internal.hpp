#pragma once

// Helpers shared by the core translation units; not installed.

#include <cstdint>
#include <random>
#include <vector>

#include "opinfo/opt_core.hpp"

namespace opinfo::detail {

/// Hilbert dimensions of the quantum factors of an all-quantum label.
std::vector<int> hilbert_dims(const SystemLabel& label);

/// Linear dimensions of every factor.
std::vector<int> linear_dims(const SystemLabel& label);

/// View of a system as (classical part) x (rest): coordinates are permuted
/// so that classical factors come first.
struct ClassicalSplit {
  int classical_dim = 1;
  SystemLabel rest = SystemLabel::trivial();
  std::vector<int> dims;  ///< linear dims in the original order
  std::vector<int> perm;  ///< classical factors first, then the rest
  bool identity_perm = true;

  Vec to_blocked(const Vec& coords) const;
  Vec from_blocked(const Vec& blocked) const;
};
ClassicalSplit split_classical(const SystemLabel& label);

/// Operator of a quantum block (coords in the product Hermitian basis).
CMat to_operator(const SystemLabel& quantum_label, const Vec& coords);
Vec to_coords(const SystemLabel& quantum_label, const CMat& op);

/// Sub-stream seeding: one engine per (seed, stream) pair so restarts and
/// trials are reproducible independently of how many were run before.
std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream);

CMat random_ginibre(int rows, int cols, std::mt19937_64& rng);

}  // namespace opinfo::detail
