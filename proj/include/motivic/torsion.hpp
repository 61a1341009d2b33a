#pragma once

#include <vector>

#include "motivic/kummer.hpp"
#include "motivic/motive_rational.hpp"

namespace motivic {

// Same shape as RelativeTerm, but the scalar lives in the localized ring:
// every denominator factor is (L^s - 1) with s a suffix sum of a composition.
struct TorsionTerm {
    MotiveRational scalar;
    std::vector<RelFactor> factors;
};

enum class TorsionKind { curve, surface, threefold_vir };

// One term per composition (r_1,...,r_l) of n, all at multiplicity 1,
// scalar prod_i 1/(L^{s_i} - 1).
std::vector<TorsionTerm> torsion_series_curve(const GeometrySpec& geom, int n);

// One term per family { m -> composition } with sum m * |composition_m| = n,
// largest multiplicity enumerated first.
std::vector<TorsionTerm> torsion_series_surface(const GeometrySpec& geom, int n);

// Surface shape with an extra L^{-r_i^m} per factor.
std::vector<TorsionTerm> torsion_series_3fold_vir(const GeometrySpec& geom, int n);

std::vector<TorsionTerm> torsion_series(const GeometrySpec& geom, int n, TorsionKind kind);

// chi_{-y} of the torsion-stack Kummer fiber, closed form.
YRational torsion_kummer_chi_y(const GeometrySpec& geom, int n, TorsionKind kind);

// The same value assembled from the term list: gcd pullback, separate
// specialization of numerators and denominators, YRational sum.
YRational torsion_kummer_chi_y_expand(const GeometrySpec& geom, int n, TorsionKind kind);

} // namespace motivic
