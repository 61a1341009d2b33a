#pragma once

#include <vector>

#include "motivic/geometry.hpp"
#include "motivic/hilbert.hpp"
#include "motivic/ylaurent.hpp"

namespace motivic {

// One symmetric-power factor Sym^b(base).
struct SymFactor {
    int b = 0;
    EPoly base;
};

// m_*( prod_i Sym^{b_i}(base_i) -> A ): a multiplicity tag on a bundle of
// symmetric powers, consumed by the gcd pullback rule.
struct RelFactor {
    int mult = 1;
    std::vector<SymFactor> syms;
};

// Formal product scalar * prod of tagged factors; the computational
// stand-in for a class relative over A.
struct RelativeTerm {
    EPoly scalar = EPoly::one();
    std::vector<RelFactor> factors; // sorted by mult
};

struct KummerResult {
    int n = 0;
    EPoly cls;
    bool virt = false;
    bool normalized = false;
    bool euler_only = false;
    GeometrySpec geom;
};

// gcd of the multiplicity tags carrying at least one symmetric power;
// 0 for a bare term.
int term_mult_gcd(const std::vector<RelFactor>& factors);

// One term per partition of n: the expansion of the relative Hilbert-scheme
// series in the chosen mode. Factor bases are classes of the total space X
// (times P^{m-1} in the virtual 3-fold mode).
std::vector<RelativeTerm> relative_expand(const GeometrySpec& geom, const WData& w, int n);

// The fiber-over-zero extraction: sum of scalar * g^{2g} * prod Sym classes.
// Returns the class E(A) * [K_n]; the caller divides by E(A).
EPoly kummer_pullback(const std::vector<RelativeTerm>& terms, const GeometrySpec& geom);

// [K_n(X)] for a surface geometry (or its Euler number in euler_only mode).
KummerResult kummer_class(const GeometrySpec& geom, const WData& w, int n);

// [K_n(X)]_vir for a 3-fold geometry; normalized multiplies by L^{(3n-g)/2}.
KummerResult kummer_vir_class(const GeometrySpec& geom, int n, bool normalized = false);

// chi_{-y}([Sym^n(X)]/[A]) closed form: chi_{-y^n}(Y) n^{g-1} (1+...+y^{n-1})^g.
YLaurent chi_y_sym_ratio(const GeometrySpec& geom, int n);
// The same ratio by exact one-variable divisions: strip (1-x)^g, specialize
// x -> 1, strip (1-y)^g.
YLaurent chi_y_sym_ratio_direct(const GeometrySpec& geom, int n);

// chi_{-y}(K_n(X)) closed form for surfaces, g >= 1.
YLaurent chi_y_kummer_surface(const GeometrySpec& geom, int n);
// chi_{-y}([K_n(X)]_vir) closed form for 3-folds, g >= 1.
YLaurent chi_y_kummer_vir(const GeometrySpec& geom, int n);

// chi(K_n(X)) = chi(Y) n^{2g-1} sum_{d|n} d w_d, g >= 1.
mpz_class euler_kummer(const GeometrySpec& geom, const std::vector<long>& w, int n);

// exp( sum_n chi(K_n)/n^{2g} t^n ) = ( sum_k P_d(k) t^k )^{chi(Y)} as exact
// rational series through order N.
bool gulbrandsen_identity_holds(const GeometrySpec& geom, int d, int N);

struct HodgeReport {
    bool diamond = true;
    bool symmetry = true;
    bool duality = true;
    bool lefschetz = true;
    bool projective_checked = false;
    bool all_pass() const { return diamond && symmetry && duality && lefschetz; }
};

// Hodge-diamond support, h^{p,q} = h^{q,p}, and for projective geometries
// duality h^{p,q} = h^{D-p,D-q} and Lefschetz monotonicity, D = 3n - g.
HodgeReport hodge_property_check(const KummerResult& res);

// Stable h^{p,q}([K~_n(X)]): the x^p y^q coefficient of E([X~_n]) divided by
// ((1-x)(1-y))^g as a double power series, at n = 2 max(p,q) + 1. Returns 0
// without computing when h^{0,0}(X) = 0.
mpz_class stable_hodge(const GeometrySpec& geom, int p, int q);

// Signed Hodge number h^{p,q} = (-1)^{p+q} e^{p,q} of a class with integer
// exponents.
mpz_class hodge_number(const EPoly& cls, int p, int q);

// Betti number b_i = sum_{p+q=i} h^{p,q}.
mpz_class betti_number(const EPoly& cls, int i);

} // namespace motivic
