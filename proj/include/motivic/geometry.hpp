#pragma once

#include <string>

#include "motivic/epoly.hpp"

namespace motivic {

// An abelian geometry X -> A: Zariski locally trivial fibration with base a
// g-dimensional abelian variety and fiber Y of dimension r. Only the
// E-polynomial of the fiber enters any computation.
struct GeometrySpec {
    int g = 0;
    EPoly fiberE = EPoly::one();
    int r = 0;
    bool projective = false;
    bool connected = true;
    int h00 = 1;

    int dim() const { return r + g; }
    // E(A) = ((1-x)(1-y))^g.
    EPoly abelianE() const;
    // E(A)_vir = L^{-g/2} E(A).
    EPoly abelianE_vir() const;
    // E(X) = E(Y) * E(A).
    EPoly totalE() const;
    mpz_class chiY() const { return euler(fiberE); }
};

EPoly curve_class(int genus);   // 1 - h x - h y + xy
EPoly projective_space(int n);  // 1 + L + ... + L^n
EPoly abelian_class(int g);     // ((1-x)(1-y))^g

// Fiber presets: point, affine1, affine3, p1, p2, p3, elliptic, k3,
// abelian:g, genus:h; otherwise `source` is read as a JSON Hodge-diamond
// file {"name": str, "dim": int, "hodge": [[h^{p,q}]]}.
GeometrySpec load_geometry(const std::string& source);

} // namespace motivic
