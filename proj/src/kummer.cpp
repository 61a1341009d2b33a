#include "motivic/kummer.hpp"

#include <numeric>

#include "motivic/partitions.hpp"
#include "motivic/qseries.hpp"

namespace motivic {

namespace {

mpz_class zpow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// Exact division of a YLaurent by a YLaurent: shift both into the
// polynomial range, then reduce by the leading term until the degree drops
// below the divisor's.
YLaurent ylaurent_exact_div(const YLaurent& a, const YLaurent& b) {
    if (b.is_zero()) throw std::invalid_argument("ylaurent_exact_div: division by zero");
    if (a.is_zero()) return {};
    const int sa = a.terms().begin()->first;
    const int sb = b.terms().begin()->first;
    YLaurent rem, div;
    for (const auto& [e, c] : a.terms()) rem.add_term(e - sa, c);
    for (const auto& [e, c] : b.terms()) div.add_term(e - sb, c);

    const auto ltb = *div.terms().rbegin();
    YLaurent quot;
    while (!rem.is_zero() && rem.terms().rbegin()->first >= ltb.first) {
        const auto ltr = *rem.terms().rbegin();
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ltr.second.get_mpz_t(),
                    ltb.second.get_mpz_t());
        if (r != 0) throw NotDivisible("ylaurent_exact_div: coefficient not divisible");
        const YLaurent t = YLaurent::monomial(ltr.first - ltb.first, q);
        quot += t;
        rem = rem - t * div;
    }
    if (!rem.is_zero()) throw NotDivisible("ylaurent_exact_div: nonzero remainder");
    return quot * YLaurent::monomial(sa - sb);
}

} // namespace

int term_mult_gcd(const std::vector<RelFactor>& factors) {
    int g = 0;
    for (const RelFactor& f : factors)
        if (!f.syms.empty()) g = std::gcd(g, f.mult);
    return g;
}

std::vector<RelativeTerm> relative_expand(const GeometrySpec& geom, const WData& w, int n) {
    if (n < 0) throw std::invalid_argument("relative_expand: n must be >= 0");
    const bool surface = (w.mode == WMode::surface);
    if (!surface && w.mode != WMode::threefold_virtual)
        throw ModeMismatch("relative_expand: surface or threefold_virtual modes only");
    if (surface && geom.dim() != 2)
        throw ModeMismatch("relative_expand: surface mode needs r + g = 2");
    if (!surface && geom.dim() != 3)
        throw ModeMismatch("relative_expand: virtual mode needs r + g = 3");

    const EPoly ex = geom.totalE();
    std::vector<RelativeTerm> out;
    for (const Partition& alpha : partitions_of(n)) {
        RelativeTerm term;
        int lpow2 = 0; // doubled exponent of the scalar L-power
        for (const auto& [m, bm] : alpha.b) {
            RelFactor f;
            f.mult = m;
            if (surface) {
                f.syms.push_back({bm, ex});
            } else {
                f.syms.push_back({bm, ex * projective_space(m - 1)});
                lpow2 -= bm * (m + 2);
            }
            term.factors.push_back(std::move(f));
        }
        if (surface) lpow2 = 2 * (n - alpha.length());
        term.scalar = EPoly::lefschetz(lpow2);
        out.push_back(std::move(term));
    }
    return out;
}

EPoly kummer_pullback(const std::vector<RelativeTerm>& terms, const GeometrySpec& geom) {
    EPoly sum;
    for (const RelativeTerm& term : terms) {
        const int g = term_mult_gcd(term.factors);
        EPoly prod = term.scalar;
        if (g > 0) prod.scale(zpow(g, 2ul * static_cast<unsigned long>(geom.g)));
        for (const RelFactor& f : term.factors)
            for (const SymFactor& s : f.syms) prod *= sym_class(s.base, s.b);
        sum += prod;
    }
    return sum;
}

KummerResult kummer_class(const GeometrySpec& geom, const WData& w, int n) {
    KummerResult res;
    res.n = n;
    res.geom = geom;
    if (w.mode == WMode::euler_only) {
        res.euler_only = true;
        if (n == 0) {
            res.cls = EPoly::one();
        } else if (geom.g >= 1) {
            res.cls = EPoly::constant(euler_kummer(geom, w.w, n));
        } else {
            // g = 0: the Kummer scheme is the Hilbert scheme.
            res.cls = EPoly::constant(euler_series(hilb_series(geom, w, n))[n]);
        }
        return res;
    }
    if (w.mode != WMode::surface)
        throw ModeMismatch("kummer_class: surface or euler_only modes only");
    if (geom.dim() != 2) throw ModeMismatch("kummer_class: needs r + g = 2");
    if (n == 0) {
        res.cls = EPoly::one();
        return res;
    }
    const EPoly pb = kummer_pullback(relative_expand(geom, w, n), geom);
    res.cls = exact_div(pb, geom.abelianE());
    return res;
}

KummerResult kummer_vir_class(const GeometrySpec& geom, int n, bool normalized) {
    if (geom.dim() != 3) throw ModeMismatch("kummer_vir_class: needs r + g = 3");
    KummerResult res;
    res.n = n;
    res.geom = geom;
    res.virt = true;
    res.normalized = normalized;
    if (n == 0) {
        res.cls = EPoly::one();
        return res;
    }
    const EPoly pb =
        kummer_pullback(relative_expand(geom, WData::threefold_virtual(), n), geom);
    res.cls = exact_div(pb, geom.abelianE_vir());
    if (normalized) res.cls *= EPoly::lefschetz(3 * n - geom.g);
    return res;
}

YLaurent chi_y_sym_ratio(const GeometrySpec& geom, int n) {
    if (geom.g < 1) throw UnsupportedG("chi_y_sym_ratio: needs g >= 1");
    if (n < 1) throw std::invalid_argument("chi_y_sym_ratio: n must be >= 1");
    YLaurent r = chi_y(geom.fiberE).subst_pow(n);
    r.scale(zpow(n, static_cast<unsigned long>(geom.g - 1)));
    return r * YLaurent::geometric(n).pow(static_cast<unsigned>(geom.g));
}

YLaurent chi_y_sym_ratio_direct(const GeometrySpec& geom, int n) {
    if (geom.g < 1) throw UnsupportedG("chi_y_sym_ratio_direct: needs g >= 1");
    EPoly s = sym_class(geom.totalE(), n);
    EPoly one_minus_x = EPoly::one() - EPoly::monomial(2, 0);
    for (int i = 0; i < geom.g; ++i) s = exact_div(s, one_minus_x);
    YLaurent ylev = chi_y(s);
    const YLaurent one_minus_y = YLaurent::one() - YLaurent::monomial(2);
    for (int i = 0; i < geom.g; ++i) ylev = ylaurent_exact_div(ylev, one_minus_y);
    return ylev;
}

YLaurent chi_y_kummer_surface(const GeometrySpec& geom, int n) {
    if (geom.g < 1) throw UnsupportedG("chi_y_kummer_surface: needs g >= 1");
    if (geom.dim() != 2) throw ModeMismatch("chi_y_kummer_surface: needs r + g = 2");
    if (n < 1) throw std::invalid_argument("chi_y_kummer_surface: n must be >= 1");
    const YLaurent chiY = chi_y(geom.fiberE);
    YLaurent sum;
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        const int d = n / m;
        YLaurent term = chiY.subst_pow(m) * YLaurent::geometric(m).pow(static_cast<unsigned>(geom.g));
        term.scale(zpow(d, static_cast<unsigned long>(geom.g + 1)));
        sum += term * YLaurent::monomial(-2 * m);
    }
    sum.scale(zpow(n, static_cast<unsigned long>(geom.g - 1)));
    return sum * YLaurent::monomial(2 * n);
}

YLaurent chi_y_kummer_vir(const GeometrySpec& geom, int n) {
    if (geom.g < 1) throw UnsupportedG("chi_y_kummer_vir: needs g >= 1");
    if (geom.dim() != 3) throw ModeMismatch("chi_y_kummer_vir: needs r + g = 3");
    if (n < 1) throw std::invalid_argument("chi_y_kummer_vir: n must be >= 1");
    const YLaurent chiY = chi_y(geom.fiberE);
    YLaurent sum;
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        const int d = n / m;
        YLaurent term = chiY.subst_pow(m);
        term *= YLaurent::geometric(d).subst_pow(m);                       // 1 + y^m + ... + y^{(d-1)m}
        term *= YLaurent::geometric(m).pow(static_cast<unsigned>(geom.g)); // (1+...+y^{m-1})^g
        term.scale(zpow(d, static_cast<unsigned long>(geom.g + 1)));
        sum += term * YLaurent::monomial(-2 * m - (n - geom.g));
    }
    sum.scale(zpow(n, static_cast<unsigned long>(geom.g - 1)));
    return sum;
}

mpz_class euler_kummer(const GeometrySpec& geom, const std::vector<long>& w, int n) {
    if (geom.g < 1) throw UnsupportedG("euler_kummer: needs g >= 1");
    if (n < 1) throw std::invalid_argument("euler_kummer: n must be >= 1");
    if (static_cast<int>(w.size()) < n)
        throw std::invalid_argument("euler_kummer: w_k not available up to n");
    mpz_class divisor_sum = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) divisor_sum += mpz_class(d) * w[d - 1];
    return geom.chiY() * zpow(n, 2ul * static_cast<unsigned long>(geom.g) - 1ul) * divisor_sum;
}

bool gulbrandsen_identity_holds(const GeometrySpec& geom, int d, int N) {
    if (geom.g < 1) throw UnsupportedG("gulbrandsen_identity_holds: needs g >= 1");
    const std::vector<long> w = solve_wk(d, N);
    QSeq lhs_exponent(N + 1);
    for (int n = 1; n <= N; ++n) {
        const mpq_class chi(euler_kummer(geom, w, n));
        lhs_exponent[n] = chi / zpow(n, 2ul * static_cast<unsigned long>(geom.g));
    }
    const QSeq lhs = qs_exp(lhs_exponent);
    QSeq pd(N + 1);
    for (int k = 0; k <= N; ++k) pd[k] = count_d_partitions(d, k, std::max(N, 10));
    const QSeq rhs = qs_pow_zint(pd, geom.chiY().get_si());
    return lhs == rhs;
}

mpz_class hodge_number(const EPoly& cls, int p, int q) {
    mpz_class e = cls.coeff(2 * p, 2 * q);
    return ((p + q) % 2 == 0) ? e : -e;
}

mpz_class betti_number(const EPoly& cls, int i) {
    mpz_class b = 0;
    for (const auto& [k, v] : cls.terms())
        if (k.first + k.second == 2 * i) b += ((i % 2) == 0) ? v : -v;
    return b;
}

HodgeReport hodge_property_check(const KummerResult& res) {
    HodgeReport rep;
    rep.projective_checked = res.geom.projective;
    if (res.n == 0) return rep;
    const int D = 3 * res.n - res.geom.g;
    const EPoly& c = res.cls;

    for (const auto& [k, v] : c.terms()) {
        if (k.first % 2 != 0 || k.second % 2 != 0 || k.first < 0 || k.second < 0 ||
            k.first > 2 * D || k.second > 2 * D)
            rep.diamond = false;
        if (c.coeff(k.second, k.first) != v) rep.symmetry = false;
    }
    if (rep.projective_checked) {
        for (const auto& [k, v] : c.terms())
            if (c.coeff(2 * D - k.first, 2 * D - k.second) != v) rep.duality = false;
        for (int p = 0; p <= D; ++p)
            for (int q = 0; p + q <= D; ++q) {
                const mpz_class lower =
                    (p >= 1 && q >= 1) ? hodge_number(c, p - 1, q - 1) : mpz_class(0);
                if (lower > hodge_number(c, p, q)) rep.lefschetz = false;
            }
    }
    return rep;
}

mpz_class stable_hodge(const GeometrySpec& geom, int p, int q) {
    if (geom.dim() != 3) throw ModeMismatch("stable_hodge: needs r + g = 3");
    if (p < 0 || q < 0) throw std::invalid_argument("stable_hodge: p, q must be >= 0");
    if (h00(geom.fiberE) == 0) return 0;

    const int n = 2 * std::max(p, q) + 1;
    const EPoly num = xtilde_series(geom.totalE(), n).at(n);
    // 1/((1-x)(1-y))^g as a double power series, truncated at (p, q).
    EPoly inv = EPoly::one();
    if (geom.g > 0) {
        EPoly ix, iy;
        for (int i = 0; i <= p; ++i) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(geom.g - 1 + i),
                         static_cast<unsigned long>(i));
            ix.add_term(2 * i, 0, b);
        }
        for (int j = 0; j <= q; ++j) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(geom.g - 1 + j),
                         static_cast<unsigned long>(j));
            iy.add_term(0, 2 * j, b);
        }
        inv = ix * iy;
    }
    mpz_class e = (num * inv).coeff(2 * p, 2 * q);
    return ((p + q) % 2 == 0) ? e : -e;
}

} // namespace motivic
