#pragma once

// Exact i.i.d. block masses by type class.

#include <vector>

#include "opinfo/linalg.hpp"

namespace opinfo::detail {

/// prod_i p_i^counts_i, evaluated in a fixed order so equal types give
/// bit-identical values.
long double sequence_probability(const Vec& p, const std::vector<int>& counts);

/// Mass of the length-N sequences left out when 2^M slots are filled with
/// the most probable ones. With whole_classes set, a type class is kept only
/// if it fits completely, and filling stops at the first class that does not.
long double excluded_mass(const Vec& p, int N, int M, bool whole_classes);

}  // namespace opinfo::detail
