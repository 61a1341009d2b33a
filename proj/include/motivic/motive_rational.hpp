#pragma once

#include <vector>

#include "motivic/epoly.hpp"
#include "motivic/ylaurent.hpp"

namespace motivic {

// A class in the localization of the coefficient ring: num divided by
// L^{den_lpow2/2} and by one factor (L^s - 1) per entry of den_factors.
// Denominators stay factored; equality is by cross-multiplication.
struct MotiveRational {
    EPoly num = EPoly::one();
    int den_lpow2 = 0;              // divisor L^{den_lpow2/2}
    std::vector<int> den_factors;   // sorted; s > 0 encodes a factor (L^s - 1)

    static MotiveRational one() { return {}; }

    MotiveRational& mul_class(const EPoly& c) {
        num *= c;
        return *this;
    }
    // Multiply by L^{k2/2}.
    MotiveRational& mul_lpow(int k2) {
        den_lpow2 -= k2;
        return *this;
    }
    // Divide by (L^s - 1).
    MotiveRational& div_factor(int s) {
        den_factors.insert(std::upper_bound(den_factors.begin(), den_factors.end(), s), s);
        return *this;
    }

    friend MotiveRational operator*(const MotiveRational& a, const MotiveRational& b) {
        MotiveRational r;
        r.num = a.num * b.num;
        r.den_lpow2 = a.den_lpow2 + b.den_lpow2;
        r.den_factors = a.den_factors;
        r.den_factors.insert(r.den_factors.end(), b.den_factors.begin(), b.den_factors.end());
        std::sort(r.den_factors.begin(), r.den_factors.end());
        return r;
    }

    // Full denominator as an EPoly (Laurent, so negative L-powers are fine).
    EPoly den_class() const {
        EPoly d = EPoly::lefschetz(den_lpow2);
        for (int s : den_factors)
            d *= EPoly::lefschetz(2 * s) - EPoly::one(); // L^s - 1
        return d;
    }

    friend bool operator==(const MotiveRational& a, const MotiveRational& b) {
        return a.num * b.den_class() == b.num * a.den_class();
    }
    friend bool operator!=(const MotiveRational& a, const MotiveRational& b) {
        return !(a == b);
    }
};

// chi_{-y} of a localized class: L specializes to y, so the denominator
// becomes y^{den_lpow2/2} * prod (y^s - 1).
YRational mr_chi_y(const MotiveRational& m);

} // namespace motivic
