#include "motivic/torsion.hpp"

#include <functional>
#include <map>

#include "motivic/partitions.hpp"

namespace motivic {

namespace {

mpz_class zpow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void check_kind(const GeometrySpec& geom, TorsionKind kind) {
    const int want = kind == TorsionKind::curve ? 1 : kind == TorsionKind::surface ? 2 : 3;
    if (geom.dim() != want)
        throw ModeMismatch("torsion: geometry dimension " + std::to_string(geom.dim()) +
                           " does not match the requested kind");
}

} // namespace

std::vector<TorsionTerm> torsion_series_curve(const GeometrySpec& geom, int n) {
    check_kind(geom, TorsionKind::curve);
    if (n < 0) throw std::invalid_argument("torsion_series_curve: n must be >= 0");
    const EPoly ex = geom.totalE();
    std::vector<TorsionTerm> out;
    if (n == 0) {
        out.push_back({MotiveRational::one(), {}});
        return out;
    }
    for (const Composition& comp : compositions_of(n)) {
        TorsionTerm term;
        RelFactor f;
        f.mult = 1;
        for (int r : comp.parts) f.syms.push_back({r, ex});
        for (int s : comp.suffix_sums()) term.scalar.div_factor(s);
        term.factors.push_back(std::move(f));
        out.push_back(std::move(term));
    }
    return out;
}

namespace {

std::vector<TorsionTerm> torsion_series_md(const GeometrySpec& geom, int n, bool with_lpow) {
    if (n < 0) throw std::invalid_argument("torsion_series: n must be >= 0");
    const EPoly ex = geom.totalE();
    std::vector<TorsionTerm> out;
    if (n == 0) {
        out.push_back({MotiveRational::one(), {}});
        return out;
    }
    // Assign a (possibly empty) composition to each multiplicity, largest m
    // first; sum of m * weight must be n.
    std::map<int, Composition, std::greater<>> chosen;
    std::function<void(int, int)> rec = [&](int m, int rem) {
        if (m == 0) {
            if (rem != 0) return;
            TorsionTerm term;
            for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) { // ascending mult
                RelFactor f;
                f.mult = it->first;
                for (int r : it->second.parts) {
                    f.syms.push_back({r, ex});
                    if (with_lpow) term.scalar.mul_lpow(-2 * r); // L^{-r_i^m}
                }
                for (int s : it->second.suffix_sums()) term.scalar.div_factor(s);
                term.factors.push_back(std::move(f));
            }
            out.push_back(std::move(term));
            return;
        }
        for (int u = rem / m; u >= 1; --u)
            for (const Composition& comp : compositions_of(u)) {
                chosen[m] = comp;
                rec(m - 1, rem - m * u);
                chosen.erase(m);
            }
        rec(m - 1, rem); // multiplicity m absent
    };
    rec(n, n);
    return out;
}

} // namespace

std::vector<TorsionTerm> torsion_series_surface(const GeometrySpec& geom, int n) {
    check_kind(geom, TorsionKind::surface);
    return torsion_series_md(geom, n, false);
}

std::vector<TorsionTerm> torsion_series_3fold_vir(const GeometrySpec& geom, int n) {
    check_kind(geom, TorsionKind::threefold_vir);
    return torsion_series_md(geom, n, true);
}

std::vector<TorsionTerm> torsion_series(const GeometrySpec& geom, int n, TorsionKind kind) {
    switch (kind) {
        case TorsionKind::curve: return torsion_series_curve(geom, n);
        case TorsionKind::surface: return torsion_series_surface(geom, n);
        case TorsionKind::threefold_vir: return torsion_series_3fold_vir(geom, n);
    }
    throw std::logic_error("torsion_series: bad kind");
}

YRational torsion_kummer_chi_y(const GeometrySpec& geom, int n, TorsionKind kind) {
    if (geom.g < 1) throw UnsupportedG("torsion_kummer_chi_y: needs g >= 1");
    if (n < 1) throw std::invalid_argument("torsion_kummer_chi_y: n must be >= 1");
    check_kind(geom, kind);
    const YLaurent y_minus_1 = YLaurent::monomial(2) - YLaurent::one();
    if (kind == TorsionKind::curve) return {YLaurent::one(), y_minus_1};

    const YLaurent chiY = chi_y(geom.fiberE);
    YLaurent sum;
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        const int d = n / m;
        YLaurent term =
            chiY.subst_pow(m) * YLaurent::geometric(m).pow(static_cast<unsigned>(geom.g - 1));
        term.scale(zpow(d, static_cast<unsigned long>(geom.g + 1)));
        if (kind == TorsionKind::threefold_vir) term *= YLaurent::monomial(-2 * m);
        sum += term;
    }
    sum.scale(zpow(n, static_cast<unsigned long>(geom.g - 1)));
    return {sum, y_minus_1};
}

YRational torsion_kummer_chi_y_expand(const GeometrySpec& geom, int n, TorsionKind kind) {
    if (geom.g < 1) throw UnsupportedG("torsion_kummer_chi_y_expand: needs g >= 1");
    if (n < 1) throw std::invalid_argument("torsion_kummer_chi_y_expand: n must be >= 1");
    const EPoly ea = geom.abelianE();
    YRational total;
    for (const TorsionTerm& term : torsion_series(geom, n, kind)) {
        const int g = term_mult_gcd(term.factors);
        EPoly prod = EPoly::one();
        for (const RelFactor& f : term.factors)
            for (const SymFactor& s : f.syms) prod *= sym_class(s.base, s.b);
        // One division by E(A) per term; the numerator is divisible because
        // each Sym factor is.
        YLaurent num = chi_y(exact_div(prod, ea));
        if (g > 0) num.scale(zpow(g, 2ul * static_cast<unsigned long>(geom.g)));
        total = total + mr_chi_y(term.scalar) * YRational(num);
    }
    return total;
}

} // namespace motivic
