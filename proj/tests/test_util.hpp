#pragma once

#include <random>

#include "motivic/geometry.hpp"

namespace motivic::testutil {

// Deterministic generator of small random classes: exponents in [-6, 6]
// doubled, coefficients in [-9, 9].
class ClassGen {
public:
    explicit ClassGen(unsigned seed, int max_terms = 5, int exp_range = 6, int coef_range = 9)
        : rng_(seed), terms_(0, max_terms), exps_(-exp_range, exp_range),
          coefs_(-coef_range, coef_range) {}

    EPoly next() {
        EPoly c;
        const int k = terms_(rng_);
        for (int i = 0; i < k; ++i) {
            int v = coefs_(rng_);
            if (v == 0) v = 1;
            c.add_term(exps_(rng_), exps_(rng_), v);
        }
        return c;
    }

    EPoly next_nonzero() {
        for (;;) {
            EPoly c = next();
            if (!c.is_zero()) return c;
        }
    }

    // Integer exponents only (doubled keys all even).
    EPoly next_integer() {
        EPoly c;
        const int k = terms_(rng_);
        for (int i = 0; i < k; ++i) {
            int v = coefs_(rng_);
            if (v == 0) v = 1;
            c.add_term(2 * exps_(rng_), 2 * exps_(rng_), v);
        }
        return c;
    }

    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

private:
    std::mt19937 rng_;
    std::uniform_int_distribution<int> terms_;
    std::uniform_int_distribution<int> exps_;
    std::uniform_int_distribution<int> coefs_;
};

inline GeometrySpec geometry(const std::string& fiber, int g) {
    GeometrySpec s = load_geometry(fiber);
    s.g = g;
    return s;
}

inline EPoly k3_diamond() {
    EPoly e = EPoly::one();
    e.add_term(4, 0, 1);
    e.add_term(0, 4, 1);
    e.add_term(2, 2, 20);
    e.add_term(4, 4, 1);
    return e;
}

} // namespace motivic::testutil
