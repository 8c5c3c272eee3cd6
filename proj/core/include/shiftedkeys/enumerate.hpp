#pragma once

#include <functional>
#include <vector>

#include "shiftedkeys/compositions.hpp"
#include "shiftedkeys/permutations.hpp"

namespace shiftedkeys {

/// All partitions of n.
std::vector<Partition> partitions_of(int n);
/// All partitions of n fitting in a rows x cols box.
std::vector<Partition> partitions_of_in_box(int n, int rows, int cols);
/// All symmetric partitions with at most `box` rows (equivalently columns),
/// any size.
std::vector<Partition> symmetric_partitions_in_box(int box);

/// All distinct rearrangements of lambda's parts supported on positions
/// 1..len (weak compositions of length <= len).
std::vector<WeakComposition> rearrangements(const Partition& lambda, int len);

/// All symmetric weak compositions alpha with |alpha| = n and l(alpha) <= len.
std::vector<WeakComposition> symmetric_compositions(int n, int len);
/// Skew-symmetric variant.
std::vector<WeakComposition> skew_symmetric_compositions(int n, int len);

/// All strict partitions of n.
std::vector<Partition> strict_partitions_of(int n);

/// All permutations of S_n, as windows in S_n.
std::vector<Permutation> symmetric_group(int n);
/// All involutions in S_n.
std::vector<Involution> involutions(int n);

/// Largest k with k(k+1)/2 <= d: the maximal length of a strict partition of d.
int max_strict_length(int d);

} // namespace shiftedkeys
