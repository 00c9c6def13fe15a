#pragma once

#include "circletop/partitions.hpp"
#include "circletop/triangle.hpp"

// Internal helpers shared by the counting pipelines.  Both fill the
// f >= 2 cells of one triangle row, assuming every earlier row and the
// row's own column f = 1 are final.

namespace circletop::detail {

// Multiset-composition rule: the f factors form a multiset of one-factor
// objects drawn from this triangle's own column 1.  Sums over partitions
// of n into exactly f parts the product binom(col1(N_j) + c_j - 1, c_j).
inline void fill_multiset_row(Triangle& t, int n) {
    for (int f = 2; f <= n; ++f) {
        Int sum = 0;
        for_each_partition(n, f, [&](const Partition& p) {
            Int prod = 1;
            for (const PartitionPart& part : p) {
                prod *= multiset_binomial(t.cell(part.size, 1), part.mult);
                if (prod == 0)
                    break;
            }
            sum += prod;
        });
        t.set_cell(n, f, std::move(sum));
    }
}

// Pinned-factor rule: exactly one factor carries the distinguished object
// (mark or bracket pair) and is pinned to a fixed position; the remaining
// f - 1 factors range over plain C expressions.
inline void fill_pinned_factor_row(Triangle& t, const Triangle& c, int n) {
    for (int f = 2; f <= n; ++f) {
        Int sum = 0;
        for (int np = 1; np <= n - 1; ++np) {
            const int rest = n - np;
            if (f - 1 > rest)
                continue;
            sum += t.cell(np, 1) * c.cell(rest, f - 1);
        }
        t.set_cell(n, f, std::move(sum));
    }
}

} // namespace circletop::detail
