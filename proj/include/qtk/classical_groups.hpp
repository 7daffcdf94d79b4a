#pragma once

#include <vector>

#include "qtk/perm_group.hpp"

namespace qtk {

/// S_n = <(0 1), (0 1 ... n-1)>.
PermutationGroup symmetric_group(std::size_t n);

/// A_n = <(0 1 2), c> with c = (0 1 ... n-1) for odd n and (1 2 ... n-1) for
/// even n, so that c is always even.
PermutationGroup alternating_group(std::size_t n);

/// Canonical element of the given cycle type: cycles packed left to right in
/// decreasing length. Lengths must sum to n; 1-cycles may be omitted.
Permutation cycle_type_representative(std::size_t n, std::vector<std::size_t> lengths);

/// All partitions of n, each in decreasing order, in reverse lexicographic
/// order starting from (n).
std::vector<std::vector<std::size_t>> integer_partitions(std::size_t n);

/// |class of that type in S_n| = n! / prod(k^m_k m_k!).
BigCount symmetric_class_size(const std::vector<std::size_t>& lengths);

}  // namespace qtk
