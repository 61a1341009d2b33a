#pragma once

#include <map>
#include <vector>

#include "motivic/errors.hpp"

namespace motivic {

// Integer partition with cached statistics: b[m] = number of parts of size m,
// gcd = gcd of the part sizes (0 for the empty partition).
struct Partition {
    std::vector<int> parts; // weakly decreasing
    std::map<int, int> b;
    int n = 0;
    int gcd = 0;

    static Partition of(std::vector<int> parts);
    int length() const { return static_cast<int>(parts.size()); }
};

// All partitions of n, each exactly once, in reverse lexicographic order:
// (n), (n-1,1), ..., (1,1,...,1).
std::vector<Partition> partitions_of(int n);

// Ordered composition r_1,...,r_l with all parts >= 1.
struct Composition {
    std::vector<int> parts;
    int total() const;
    // s_i = r_i + r_{i+1} + ... + r_l, returned 0-indexed.
    std::vector<int> suffix_sums() const;
};

// All 2^{n-1} compositions of n, first part descending, then recursively.
std::vector<Composition> compositions_of(int n);

// Number of downward-closed subsets of N^d of cardinality n (monomial
// staircases of colength n in d variables), by exhaustive backtracking.
// d = 2 gives ordinary partitions, d = 3 plane partitions.
long count_d_partitions(int d, int n, int max_n = 10);

// Solve prod_{k>=1} (1-t^k)^{-w_k} = sum_n P_d(n) t^n for w_1..w_N over the
// rationals and assert the solution is integral.
std::vector<long> solve_wk(int d, int N);

} // namespace motivic
