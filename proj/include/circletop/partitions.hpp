#pragma once

#include "circletop/bigint.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace circletop {

/// One run of equal parts inside an integer partition.
struct PartitionPart {
    int size;  // part value N_j, positive
    int mult;  // multiplicity c_j, positive
};

/// Partition of an integer written as runs with strictly decreasing part
/// sizes; sum(size * mult) is the partitioned integer and sum(mult) is the
/// number of parts counted with multiplicity.
using Partition = std::vector<PartitionPart>;

/// Streams every partition of n exactly once, in lexicographic order by
/// decreasing part sizes ([n] first, all-ones last).  The order is part of
/// the contract.  If exact_parts is set, only partitions whose part count
/// (with multiplicity) equals it are visited.  n = 0 yields one empty
/// partition.
void for_each_partition(int n, std::optional<int> exact_parts,
                        const std::function<void(const Partition&)>& visit);

inline void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    for_each_partition(n, std::nullopt, visit);
}

/// Standard binomial coefficient; 0 when k > n.
Int binomial(int n, int k);

/// Number of multisets of size c drawn from n types: binom(n + c - 1, c).
/// The type count may itself be a big integer (it is a triangle cell in the
/// multiset-composition recurrences).
Int multiset_binomial(const Int& n, int c);

} // namespace circletop
