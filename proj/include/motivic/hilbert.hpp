#pragma once

#include <vector>

#include "motivic/geometry.hpp"
#include "motivic/powerseries.hpp"

namespace motivic {

// The punctual exponent data [W_k] of H_d(t) = prod_k (1-t^k)^{-[W_k]}.
// Only the surface and virtual 3-fold cases have known classes; all other
// dimensions are supported at Euler level only, with w_k solved from the
// d-dimensional partition counts.
enum class WMode { surface, threefold_virtual, euler_only };

struct WData {
    WMode mode = WMode::surface;
    int d = 2;                   // total dimension (euler_only)
    std::vector<long> w;    // w_k for k = 1..N (euler_only)

    static WData surface();
    static WData threefold_virtual();
    static WData euler_only(int d, int N);

    // [W_k]: surface L^{k-1}; virtual 3-fold L^{-(k+2)/2} E(P^{k-1}).
    EPoly w_class(int k) const;
};

// prod_{k>=1} (1 - L^{k-1} t^k)^{-1}: punctual Hilbert schemes on a surface.
ESeries h2_series(int N);
// prod_{m>=1} prod_{k=0}^{m-1} (1 - L^{-m/2+k-1} t^m)^{-1}: virtual motives
// of punctual Hilbert schemes on a 3-fold.
ESeries h3vir_series(int N);

// Absolute Hilbert-scheme series (g = 0): the punctual series raised to the
// fiber class; in euler_only mode an integer-level series.
ESeries hilb_series(const GeometrySpec& geom, const WData& w, int N);

// Normalized virtual series sum_n E([X~_n]) t^n for an absolute 3-fold with
// E-polynomial ex; integer exponents only.
ESeries xtilde_series(const EPoly& ex, int N);

// Coefficient of x^p y^q in G(x,y,1) where (1-t)^{-1} G = xtilde_series.
// Sums t-coefficients through n_max and demands the next two vanish.
mpz_class g_function_coeff(const EPoly& ex, int p, int q, int n_max);

} // namespace motivic
