#include "motivic/powerseries.hpp"

#include "motivic/partitions.hpp"

namespace motivic {

namespace {

mpz_class binom_z_ui(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

} // namespace

ESeries geometric_factor(int p2, int q2, const mpz_class& e, int k, int N) {
    ESeries f = ESeries::one(N);
    if (e == 0) return f;
    for (int n = 1; n * k <= N; ++n) {
        mpz_class c;
        if (e > 0) {
            c = binom_z_ui(e + n - 1, static_cast<unsigned long>(n));
        } else {
            c = binom_z_ui(-e, static_cast<unsigned long>(n));
            if (n % 2 != 0) c = -c;
        }
        f.at(n * k) = EPoly::monomial(n * p2, n * q2, c);
    }
    return f;
}

ESeries zeta_series_tk(const EPoly& c, int k, int N) {
    ESeries z = ESeries::one(N);
    for (const auto& [key, e] : c.terms())
        z *= geometric_factor(key.first, key.second, e, k, N);
    return z;
}

ESeries zeta_series(const EPoly& c, int N) { return zeta_series_tk(c, 1, N); }

EPoly sym_class(const EPoly& c, int n) {
    if (n < 0) throw std::invalid_argument("sym_class: n must be >= 0");
    if (n == 0) return EPoly::one();
    QPoly acc;
    const QPoly qc = to_qpoly(c);
    for (const Partition& alpha : partitions_of(n)) {
        QPoly term = QPoly::one();
        mpz_class denom = 1;
        for (const auto& [j, bj] : alpha.b) {
            QPoly pw = adams(qc, j).pow(static_cast<unsigned>(bj));
            term *= pw;
            mpz_class jb;
            mpz_ui_pow_ui(jb.get_mpz_t(), static_cast<unsigned long>(j),
                          static_cast<unsigned long>(bj));
            mpz_class fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(bj));
            denom *= jb * fact;
        }
        term.scale(mpq_class(1, denom));
        acc += term;
    }
    return to_epoly(acc, "sym_class");
}

ESeries pleth_log(const ESeries& a) {
    if (!a.at(0).is_one()) throw BadConstantTerm("pleth_log: constant term must be 1");
    const int N = a.order();
    ESeries rest = a;
    ESeries out(N);
    for (int k = 1; k <= N; ++k) {
        const EPoly ck = rest.at(k);
        out.at(k) = ck;
        if (!ck.is_zero() && k < N) rest *= zeta_series_tk(-ck, k, N);
    }
    return out;
}

ESeries pleth_exp(const ESeries& f) {
    if (!f.at(0).is_zero())
        throw BadConstantTerm("pleth_exp: constant term must be 0");
    const int N = f.order();
    // S = sum_j psi_j(f)/j, over Q.
    QSeries s(N);
    for (int j = 1; j <= N; ++j) {
        const mpq_class inv_j(1, j);
        for (int k = 1; j * k <= N; ++k) {
            if (f.at(k).is_zero()) continue;
            QPoly t = to_qpoly(adams(f.at(k), j));
            t.scale(inv_j);
            s.at(j * k) += t;
        }
    }
    // exp(S): n E_n = sum_k k S_k E_{n-k}.
    QSeries e(N);
    e.at(0) = QPoly::one();
    for (int n = 1; n <= N; ++n) {
        QPoly acc;
        for (int k = 1; k <= n; ++k) {
            if (s.at(k).is_zero() || e.at(n - k).is_zero()) continue;
            QPoly t = s.at(k) * e.at(n - k);
            t.scale(mpq_class(k));
            acc += t;
        }
        acc.scale(mpq_class(1, n));
        e.at(n) = acc;
    }
    ESeries out(N);
    for (int n = 0; n <= N; ++n) out.at(n) = to_epoly(e.at(n), "pleth_exp");
    return out;
}

ESeries power_exp(const ESeries& a, const EPoly& m) {
    return pleth_exp(pleth_log(a).scaled(m));
}

ESeries power_exp_zeta(const ESeries& a, const EPoly& m) {
    const int N = a.order();
    const ESeries lg = pleth_log(a);
    ESeries r = ESeries::one(N);
    for (int k = 1; k <= N; ++k) {
        const EPoly ck = lg.at(k) * m;
        if (!ck.is_zero()) r *= zeta_series_tk(ck, k, N);
    }
    return r;
}

ESeries subst_t(const ESeries& a, const EPoly& m, int k) {
    if (!m.is_monomial()) throw NotAMonomial("subst_t: substitution class must be a single term");
    if (k < 1) throw std::invalid_argument("subst_t: k must be >= 1");
    const int N = a.order();
    ESeries r(N);
    EPoly mpow = EPoly::one();
    for (int j = 0; j * k <= N; ++j) {
        r.at(j * k) = a.at(j) * mpow;
        mpow *= m;
    }
    return r;
}

std::vector<mpz_class> euler_series(const ESeries& a) {
    std::vector<mpz_class> r(a.order() + 1);
    for (int n = 0; n <= a.order(); ++n) r[n] = euler(a.at(n));
    return r;
}

} // namespace motivic
