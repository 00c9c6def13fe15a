#include "circletop/partitions.hpp"

namespace circletop {

namespace {

// Descending-lex generation: choose the next run (size, mult) with size
// strictly below the previous run, largest sizes first.
void descend(int remaining, int max_size, int parts_so_far, std::optional<int> exact_parts,
             Partition& acc, const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        if (!exact_parts || parts_so_far == *exact_parts)
            visit(acc);
        return;
    }
    for (int size = std::min(remaining, max_size); size >= 1; --size) {
        for (int mult = remaining / size; mult >= 1; --mult) {
            if (exact_parts && parts_so_far + mult > *exact_parts)
                continue;
            acc.push_back({size, mult});
            descend(remaining - size * mult, size - 1, parts_so_far + mult, exact_parts, acc, visit);
            acc.pop_back();
        }
    }
}

} // namespace

void for_each_partition(int n, std::optional<int> exact_parts,
                        const std::function<void(const Partition&)>& visit) {
    if (n < 0)
        throw ContractViolation("cannot partition a negative integer");
    Partition acc;
    descend(n, n, 0, exact_parts, acc, visit);
}

Int binomial(int n, int k) {
    if (n < 0 || k < 0)
        throw ContractViolation("binomial arguments must be nonnegative");
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // exact: partial product is binom(n-k+i, i)
    }
    return result;
}

Int multiset_binomial(const Int& n, int c) {
    if (c < 0)
        throw ContractViolation("multiset size must be nonnegative");
    if (n < 0)
        throw ContractViolation("type count must be nonnegative");
    Int result = 1;
    for (int i = 1; i <= c; ++i) {
        result *= n + (i - 1);
        result /= i; // exact: partial product is binom(n+i-1, i)
    }
    return result;
}

} // namespace circletop
