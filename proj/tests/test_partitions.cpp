#include <doctest.h>

#include "motivic/partitions.hpp"
#include "motivic/qseries.hpp"

using namespace motivic;

TEST_CASE("partitions_of basics") {
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).size() == static_cast<size_t>(count_d_partitions(2, 4)));

    const auto empty = partitions_of(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].parts.empty());
    CHECK(empty[0].gcd == 0);

    // (4,1,1) inside partitions_of(6).
    bool found = false;
    for (const Partition& a : partitions_of(6)) {
        if (a.parts == std::vector<int>{4, 1, 1}) {
            found = true;
            CHECK(a.b.at(1) == 2);
            CHECK(a.b.at(4) == 1);
            CHECK(a.length() == 3);
            CHECK(a.gcd == 1);
        }
    }
    CHECK(found);

    // Reverse lexicographic order starts at (n) and ends at (1^n).
    const auto p4 = partitions_of(4);
    CHECK(p4.front().parts == std::vector<int>{4});
    CHECK(p4.back().parts == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("partition statistics are consistent") {
    for (int n = 1; n <= 8; ++n) {
        const auto all = partitions_of(n);
        CHECK(static_cast<long>(all.size()) == count_d_partitions(2, n));
        for (const Partition& a : all) {
            int sum = 0;
            for (const auto& [m, bm] : a.b) sum += m * bm;
            CHECK(sum == n);
            for (int part : a.parts) CHECK(part % a.gcd == 0);
        }
    }
}

TEST_CASE("compositions_of") {
    CHECK(compositions_of(3).size() == 4);
    const auto c2 = compositions_of(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0].parts == std::vector<int>{2});
    CHECK(c2[1].parts == std::vector<int>{1, 1});
    CHECK(c2[1].suffix_sums() == std::vector<int>{2, 1});
    CHECK(compositions_of(1).size() == 1);
    for (int n = 1; n <= 12; ++n)
        CHECK(compositions_of(n).size() == (1ull << (n - 1)));
}

TEST_CASE("count_d_partitions") {
    CHECK(count_d_partitions(2, 4) == 5);
    for (int d = 1; d <= 4; ++d) CHECK(count_d_partitions(d, 0) == 1);
    CHECK(count_d_partitions(3, 3) == 6);
    CHECK(count_d_partitions(3, 4) == 13);
    for (int n = 0; n <= 8; ++n) CHECK(count_d_partitions(1, n) == 1);
    CHECK_THROWS_AS(count_d_partitions(3, 11), LimitExceeded);
    CHECK(count_d_partitions(3, 11, 12) > 0); // bound is configurable
}

TEST_CASE("solve_wk") {
    CHECK(solve_wk(2, 5) == std::vector<long>{1, 1, 1, 1, 1});
    CHECK(solve_wk(3, 5) == std::vector<long>{1, 2, 3, 4, 5});
    CHECK(solve_wk(1, 3) == std::vector<long>{1, 0, 0});
}

TEST_CASE("solve_wk reproduces P_d on plug-back") {
    const int N = 6;
    for (int d = 1; d <= 4; ++d) {
        const auto w = solve_wk(d, N);
        // prod_k (1-t^k)^{-w_k} over Q.
        QSeq prod(N + 1);
        prod[0] = 1;
        for (int k = 1; k <= N; ++k) {
            QSeq log_term(N + 1);
            for (int j = 1; j * k <= N; ++j)
                log_term[j * k] = mpq_class(w[k - 1], j);
            prod = qs_mul(prod, qs_exp(log_term));
        }
        for (int n = 0; n <= N; ++n)
            CHECK(prod[n] == mpq_class(static_cast<long>(count_d_partitions(d, n))));
    }
}
