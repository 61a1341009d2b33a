#include "motivic/partitions.hpp"

#include <gmpxx.h>

#include <functional>
#include <numeric>
#include <set>

#include "motivic/qseries.hpp"

namespace motivic {

Partition Partition::of(std::vector<int> parts) {
    Partition p;
    p.parts = std::move(parts);
    for (int m : p.parts) {
        p.n += m;
        ++p.b[m];
        p.gcd = std::gcd(p.gcd, m);
    }
    return p;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int max_part) {
        if (rem == 0) {
            out.push_back(Partition::of(cur));
            return;
        }
        for (int p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int Composition::total() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

std::vector<int> Composition::suffix_sums() const {
    std::vector<int> s(parts.size());
    int acc = 0;
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) {
        acc += parts[i];
        s[i] = acc;
    }
    return s;
}

std::vector<Composition> compositions_of(int n) {
    if (n < 1) throw std::invalid_argument("compositions_of: n must be >= 1");
    std::vector<Composition> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back({cur});
            return;
        }
        for (int p = rem; p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

namespace {

using Point = std::vector<int>;

// Addable to the ideal S: not present, and all coordinate predecessors present.
bool addable(const std::set<Point>& s, const Point& p) {
    if (s.count(p)) return false;
    Point q = p;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        --q[i];
        if (!s.count(q)) return false;
        ++q[i];
    }
    return true;
}

} // namespace

// Every order ideal is built exactly once by inserting its points in
// increasing lexicographic order; componentwise <= implies lex <=, so each
// lex prefix is itself downward closed.
long count_d_partitions(int d, int n, int max_n) {
    if (d < 1) throw std::invalid_argument("count_d_partitions: d must be >= 1");
    if (n < 0) throw std::invalid_argument("count_d_partitions: n must be >= 0");
    if (n > max_n)
        throw LimitExceeded("count_d_partitions: n = " + std::to_string(n) +
                            " exceeds the configured limit " + std::to_string(max_n));
    if (n == 0) return 1;

    std::set<Point> ideal;
    long count = 0;
    std::function<void(const Point&, int)> rec = [&](const Point& last, int rem) {
        if (rem == 0) {
            ++count;
            return;
        }
        // Candidate points: successors of present points, lex-greater than
        // the last inserted one.
        std::set<Point> cands;
        for (const Point& p : ideal) {
            Point q = p;
            for (int i = 0; i < d; ++i) {
                ++q[i];
                if (q > last && addable(ideal, q)) cands.insert(q);
                --q[i];
            }
        }
        for (const Point& q : cands) {
            ideal.insert(q);
            rec(q, rem - 1);
            ideal.erase(q);
        }
    };

    const Point origin(d, 0);
    ideal.insert(origin);
    rec(origin, n - 1);
    return count;
}

std::vector<long> solve_wk(int d, int N) {
    if (N < 1) throw std::invalid_argument("solve_wk: N must be >= 1");
    QSeq a(N + 1);
    for (int n = 0; n <= N; ++n) a[n] = count_d_partitions(d, n, std::max(N, 10));
    const QSeq c = qs_log(a);

    // n*c_n = sum_{k|n} k*w_k, solved triangularly.
    std::vector<mpq_class> w(N + 1);
    std::vector<long> out(N);
    for (int n = 1; n <= N; ++n) {
        mpq_class rhs = mpq_class(n) * c[n];
        for (int k = 1; k < n; ++k)
            if (n % k == 0) rhs -= mpq_class(k) * w[k];
        w[n] = rhs / n;
        w[n].canonicalize();
        if (w[n].get_den() != 1)
            throw NonIntegralSolution("solve_wk: w_" + std::to_string(n) + " = " +
                                      w[n].get_str() + " is not an integer");
        out[n - 1] = w[n].get_num().get_si();
    }
    return out;
}

} // namespace motivic
