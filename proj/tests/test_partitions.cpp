#include "circletop/partitions.hpp"

#include <doctest.h>

#include <vector>

using namespace circletop;

namespace {

std::vector<std::vector<int>> collect_flat(int n, std::optional<int> exact_parts = std::nullopt) {
    std::vector<std::vector<int>> out;
    for_each_partition(n, exact_parts, [&](const Partition& p) {
        std::vector<int> flat;
        for (const PartitionPart& part : p)
            for (int i = 0; i < part.mult; ++i)
                flat.push_back(part.size);
        out.push_back(std::move(flat));
    });
    return out;
}

// Dynamic-programming partition counter, independent of the stream.
long partition_count_dp(int n) {
    std::vector<long> ways(n + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int total = part; total <= n; ++total)
            ways[total] += ways[total - part];
    return ways[n];
}

} // namespace

TEST_CASE("partition stream") {
    SUBCASE("partitions of 4 into exactly two parts") {
        const auto got = collect_flat(4, 2);
        const std::vector<std::vector<int>> want{{3, 1}, {2, 2}};
        CHECK(got == want);
    }
    SUBCASE("zero has one empty partition") {
        const auto got = collect_flat(0);
        REQUIRE(got.size() == 1);
        CHECK(got[0].empty());
    }
    SUBCASE("count of partitions of 12 is 77") {
        long count = 0;
        for_each_partition(12, [&](const Partition&) { ++count; });
        CHECK(count == 77);
        CHECK(count == partition_count_dp(12));
    }
    SUBCASE("stream count matches the DP counter up to 30") {
        for (int n = 0; n <= 30; ++n) {
            long count = 0;
            for_each_partition(n, [&](const Partition&) { ++count; });
            CHECK(count == partition_count_dp(n));
        }
    }
    SUBCASE("iteration order is descending-lex and part of the contract") {
        const auto got = collect_flat(5);
        const std::vector<std::vector<int>> want{
            {5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
        CHECK(got == want);
    }
    SUBCASE("exact-parts filter partitions into classes summing to p(n)") {
        for (int n = 1; n <= 12; ++n) {
            long by_parts = 0;
            for (int f = 1; f <= n; ++f)
                for_each_partition(n, f, [&](const Partition&) { ++by_parts; });
            CHECK(by_parts == partition_count_dp(n));
        }
    }
    SUBCASE("multiplicities encode the runs") {
        for_each_partition(6, [&](const Partition& p) {
            int total = 0;
            int prev_size = 1 << 20;
            for (const PartitionPart& part : p) {
                CHECK(part.size < prev_size); // strictly decreasing sizes
                CHECK(part.mult >= 1);
                prev_size = part.size;
                total += part.size * part.mult;
            }
            CHECK(total == 6);
        });
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(18, 9) / 10 == 4862); // Catalan number C_9
}

TEST_CASE("multiset binomial") {
    CHECK(multiset_binomial(4, 2) == 10);
    CHECK(multiset_binomial(7, 0) == 1);
    CHECK(multiset_binomial(0, 0) == 1);
    CHECK(multiset_binomial(0, 3) == 0);
    CHECK(multiset_binomial(2, 3) == 4);

    SUBCASE("equals the count of non-decreasing tuples") {
        for (int n = 0; n <= 6; ++n) {
            for (int c = 0; c <= 6; ++c) {
                // count non-decreasing c-tuples over {1..n}
                long count = 0;
                std::vector<int> tuple(c, 1);
                if (c == 0) {
                    count = 1;
                } else if (n > 0) {
                    for (;;) {
                        ++count;
                        int i = c - 1;
                        while (i >= 0 && tuple[i] == n)
                            --i;
                        if (i < 0)
                            break;
                        const int next = tuple[i] + 1;
                        for (int j = i; j < c; ++j)
                            tuple[j] = next;
                    }
                }
                CHECK(multiset_binomial(n, c) == count);
            }
        }
    }
}
