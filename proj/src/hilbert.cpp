#include "motivic/hilbert.hpp"

#include "motivic/partitions.hpp"

namespace motivic {

WData WData::surface() { return {WMode::surface, 2, {}}; }

WData WData::threefold_virtual() { return {WMode::threefold_virtual, 3, {}}; }

WData WData::euler_only(int d, int N) {
    return {WMode::euler_only, d, solve_wk(d, N)};
}

EPoly WData::w_class(int k) const {
    switch (mode) {
        case WMode::surface:
            return EPoly::lefschetz(2 * (k - 1));
        case WMode::threefold_virtual:
            return EPoly::lefschetz(-(k + 2)) * projective_space(k - 1);
        case WMode::euler_only:
            if (k < 1 || k > static_cast<int>(w.size()))
                throw std::invalid_argument("w_class: k out of solved range");
            return EPoly::constant(w[k - 1]);
    }
    throw std::logic_error("w_class: bad mode");
}

ESeries h2_series(int N) {
    ESeries s = ESeries::one(N);
    for (int k = 1; k <= N; ++k)
        s *= geometric_factor(2 * (k - 1), 2 * (k - 1), 1, k, N);
    return s;
}

ESeries h3vir_series(int N) {
    ESeries s = ESeries::one(N);
    for (int m = 1; m <= N; ++m)
        for (int k = 0; k < m; ++k) {
            const int e2 = 2 * (k - 1) - m; // doubled exponent of L^{-m/2+k-1}
            s *= geometric_factor(e2, e2, 1, m, N);
        }
    return s;
}

ESeries hilb_series(const GeometrySpec& geom, const WData& w, int N) {
    if (geom.g != 0)
        throw ModeMismatch("hilb_series: absolute case only (g = 0)");
    switch (w.mode) {
        case WMode::surface:
            if (geom.r != 2) throw ModeMismatch("hilb_series: surface mode needs a 2-dimensional fiber");
            return power_exp(h2_series(N), geom.fiberE);
        case WMode::threefold_virtual:
            if (geom.r != 3) throw ModeMismatch("hilb_series: virtual mode needs a 3-dimensional fiber");
            return power_exp(h3vir_series(N), geom.fiberE);
        case WMode::euler_only: {
            if (w.d != geom.dim())
                throw ModeMismatch("hilb_series: euler_only dimension disagrees with the geometry");
            if (static_cast<int>(w.w.size()) < N)
                throw std::invalid_argument("hilb_series: w_k not solved up to the requested order");
            // prod_k (1-t^k)^{-w_k chi(Y)} over constant classes.
            const mpz_class chi = geom.chiY();
            ESeries s = ESeries::one(N);
            for (int k = 1; k <= N; ++k)
                s *= geometric_factor(0, 0, mpz_class(w.w[k - 1]) * chi, k, N);
            return s;
        }
    }
    throw std::logic_error("hilb_series: bad mode");
}

ESeries xtilde_series(const EPoly& ex, int N) {
    if (!ex.integer_exponents())
        throw HalfExponentInput("xtilde_series: the 3-fold class must have integer exponents");
    ESeries s = ESeries::one(N);
    for (int m = 1; m <= N; ++m)
        for (int k = 0; k < m; ++k)
            for (const auto& [key, e] : ex.terms()) {
                const int p2 = 2 * (k + m - 1) + key.first;
                const int q2 = 2 * (k + m - 1) + key.second;
                s *= geometric_factor(p2, q2, e, m, N);
            }
    return s;
}

mpz_class g_function_coeff(const EPoly& ex, int p, int q, int n_max) {
    if (h00(ex) != 1)
        throw std::invalid_argument("g_function_coeff: requires h^{0,0} = 1");
    if (n_max < 2 * std::max(p, q))
        throw std::invalid_argument("g_function_coeff: n_max below the stable range");
    const int N = n_max + 2;
    const ESeries xt = xtilde_series(ex, N);
    // G = (1 - t) * xtilde_series.
    ESeries one_minus_t = ESeries::one(N);
    one_minus_t.at(1) = -EPoly::one();
    const ESeries g = one_minus_t * xt;

    mpz_class sum = 0;
    for (int j = 0; j <= n_max; ++j) sum += g.at(j).coeff(2 * p, 2 * q);
    for (int j = n_max + 1; j <= n_max + 2; ++j)
        if (g.at(j).coeff(2 * p, 2 * q) != 0)
            throw NotStabilized("g_function_coeff: guard coefficient at t^" + std::to_string(j) +
                                " is nonzero");
    return sum;
}

} // namespace motivic
