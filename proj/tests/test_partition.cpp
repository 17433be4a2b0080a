#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "lusym/partition.hpp"

using namespace lusym;

namespace {

// Oracle: transpose by counting cells per column on the Young diagram.
Partition transpose_oracle(const Partition& p) {
    std::vector<int> cols;
    for (std::size_t i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.parts()[i]; ++j) {
            if (static_cast<std::size_t>(j) >= cols.size())
                cols.push_back(0);
            ++cols[static_cast<std::size_t>(j)];
        }
    return Partition(std::move(cols));
}

// Oracle: recursive partition count.
long count_oracle(int n, int maxp) {
    if (n == 0) return 1;
    if (maxp == 0) return 0;
    static std::map<std::pair<int, int>, long> memo;
    auto key = std::make_pair(n, maxp);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    long r = 0;
    for (int p = 1; p <= std::min(n, maxp); ++p)
        r += count_oracle(n - p, p);
    memo[key] = r;
    return r;
}

Partition random_partition(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> dn(0, max_size);
    int budget = dn(rng);
    std::vector<int> parts;
    int prev = budget;
    while (budget > 0 && prev > 0) {
        std::uniform_int_distribution<int> dp(1, std::min(prev, budget));
        int p = dp(rng);
        parts.push_back(p);
        prev = p;
        budget -= p;
    }
    return Partition(std::move(parts));
}

} // namespace

TEST_CASE("partition construction canonicalizes") {
    CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({4, 1}).size() == 5);
}

TEST_CASE("transpose basics") {
    CHECK(Partition{}.transpose() == Partition{});
    CHECK(Partition({3}).transpose() == Partition({1, 1, 1}));
    // derived via the cell-count oracle
    CHECK(Partition({2, 1}).transpose() == transpose_oracle(Partition({2, 1})));
    CHECK(Partition({2, 1}).transpose() == Partition({2, 1}));
}

TEST_CASE("transpose matches oracle and is involutive on random partitions") {
    std::mt19937 rng(7);
    for (int i = 0; i < 10000; ++i) {
        Partition p = random_partition(rng, 40);
        CHECK(p.transpose() == transpose_oracle(p));
        CHECK(p.transpose().transpose() == p);
        CHECK(p.transpose().size() == p.size());
    }
}

TEST_CASE("shift dominance") {
    CHECK(shift_dominates({}, Partition({1})));
    CHECK_FALSE(shift_dominates(Partition({1}), {}));
    CHECK(shift_dominates(Partition({2, 1}), Partition({2, 2})));
    CHECK_FALSE(shift_dominates(Partition({3}), Partition({2, 2})));
}

TEST_CASE("dominance bounds sizes") {
    std::mt19937 rng(11);
    for (int i = 0; i < 5000; ++i) {
        Partition l = random_partition(rng, 15), m = random_partition(rng, 15);
        if (!shift_dominates(l, m))
            continue;
        // each part drops by at most one
        CHECK(l.size() <= m.size());
        CHECK(l.size() >= m.size() - static_cast<int>(m.length()));
    }
}

TEST_CASE("closeness and common parts") {
    CHECK(is_close({}, {}));
    // padded comparison: (2,0) vs (1,1) differs by one in each slot
    CHECK(is_close(Partition({2}), Partition({1, 1})));
    CHECK_FALSE(is_close(Partition({3}), Partition({1})));

    CHECK(common_parts(Partition({2, 1}), Partition({2, 2})) == Partition({2}));
    CHECK(common_parts({}, {}) == Partition{});
    CHECK(common_parts(Partition({1, 1}), Partition({1, 1})) == Partition({1, 1}));
}

TEST_CASE("two-transversality") {
    CHECK(is_two_transverse({}, {}));
    CHECK_FALSE(is_two_transverse(Partition({2, 1}), Partition({2, 2})));
    // lambda^t and (lambda_*)^t for lambda = [3,1]
    Partition lam({3, 1});
    CHECK(is_two_transverse(lam.transpose(), lam.remove_first_row().transpose()));
}

TEST_CASE("two-transverse implies close, exhaustively") {
    std::vector<Partition> all;
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n))
            all.push_back(p);
    for (const auto& a : all)
        for (const auto& b : all)
            if (is_two_transverse(a, b))
                CHECK(is_close(a, b));
}

TEST_CASE("first-row removal and the unique 2-transverse partner") {
    CHECK(Partition({3, 1}).remove_first_row() == Partition({1}));
    CHECK(Partition{}.remove_first_row() == Partition{});
    CHECK(Partition({2, 2, 1}).remove_first_row() == Partition({2, 1}));

    for (int n = 0; n <= 12; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            Partition expected = lam.remove_first_row();
            int m = n - lam.first();
            int hits = 0;
            for (const auto& mu : enumerate_partitions(m)) {
                if (is_two_transverse(lam.transpose(), mu.transpose())) {
                    ++hits;
                    CHECK(mu == expected);
                }
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("enumeration counts against the recursive oracle") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(4).size() == 5);
    for (int n = 0; n <= 12; ++n)
        CHECK(static_cast<long>(enumerate_partitions(n).size()) == count_oracle(n, n));

    CHECK(enumerate_bipartitions(1).size() == 2);
    CHECK(enumerate_bipartitions(2).size() == 5);
    for (int n = 0; n <= 10; ++n) {
        long expect = 0;
        for (int k = 0; k <= n; ++k)
            expect += count_oracle(k, k) * count_oracle(n - k, n - k);
        CHECK(static_cast<long>(enumerate_bipartitions(n).size()) == expect);
    }
}

TEST_CASE("enumeration is deterministic, duplicate-free and capped") {
    auto a = enumerate_partitions(9);
    auto b = enumerate_partitions(9);
    CHECK(a == b);
    for (std::size_t i = 1; i < a.size(); ++i)
        CHECK(a[i - 1] < a[i]);
    CHECK_THROWS_AS(enumerate_partitions(65), std::length_error);
    CHECK_THROWS_AS(enumerate_bipartitions(65), std::length_error);
}
