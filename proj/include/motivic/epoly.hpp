#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>

#include "motivic/errors.hpp"
#include "motivic/ylaurent.hpp"

namespace motivic {

// Sparse Laurent polynomial in x, y with half-integer exponents. Exponents
// are stored doubled: the key (p2, q2) stands for x^{p2/2} y^{q2/2}. No zero
// coefficient is ever stored, and no floating point appears anywhere.
template <class Coef>
class LaurentXY {
public:
    using key_type = std::pair<int, int>; // (p2, q2), doubled exponents
    using map_type = std::map<key_type, Coef>;

    LaurentXY() = default;

    static LaurentXY constant(Coef c) { return monomial(0, 0, std::move(c)); }
    static LaurentXY one() { return constant(Coef(1)); }
    static LaurentXY monomial(int p2, int q2, Coef c = Coef(1)) {
        LaurentXY r;
        if (c != 0) r.terms_[{p2, q2}] = std::move(c);
        return r;
    }
    // The Lefschetz class L = xy; lefschetz(k2) is L^{k2/2}.
    static LaurentXY lefschetz(int k2) { return monomial(k2, k2); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == key_type{0, 0} &&
               terms_.begin()->second == 1;
    }
    // Single term, any coefficient.
    bool is_monomial() const { return terms_.size() == 1; }
    bool integer_exponents() const {
        for (const auto& [k, c] : terms_)
            if (k.first % 2 != 0 || k.second % 2 != 0) return false;
        return true;
    }

    const map_type& terms() const { return terms_; }

    Coef coeff(int p2, int q2) const {
        auto it = terms_.find({p2, q2});
        return it == terms_.end() ? Coef(0) : it->second;
    }

    void add_term(int p2, int q2, const Coef& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace({p2, q2}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentXY operator-() const {
        LaurentXY r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    LaurentXY& operator+=(const LaurentXY& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    LaurentXY& operator-=(const LaurentXY& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, Coef(-c));
        return *this;
    }
    friend LaurentXY operator+(LaurentXY a, const LaurentXY& b) { return a += b; }
    friend LaurentXY operator-(LaurentXY a, const LaurentXY& b) { return a -= b; }

    friend LaurentXY operator*(const LaurentXY& a, const LaurentXY& b) {
        LaurentXY r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    LaurentXY& operator*=(const LaurentXY& o) { return *this = *this * o; }

    LaurentXY& scale(const Coef& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentXY operator*(LaurentXY a, const Coef& c) { return a.scale(c); }

    LaurentXY pow(unsigned e) const {
        LaurentXY r = one();
        LaurentXY b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b = e > 1 ? b * b : b;
            e >>= 1u;
        }
        return r;
    }

    friend bool operator==(const LaurentXY& a, const LaurentXY& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentXY& a, const LaurentXY& b) { return !(a == b); }

    // Strict weak order so classes can key containers; lexicographic on terms.
    friend bool operator<(const LaurentXY& a, const LaurentXY& b) {
        return a.terms_ < b.terms_;
    }

private:
    map_type terms_;
};

using EPoly = LaurentXY<mpz_class>;
using QPoly = LaurentXY<mpq_class>;

// The Adams operation psi_j: x -> x^j, y -> y^j. A ring homomorphism.
template <class Coef>
LaurentXY<Coef> adams(const LaurentXY<Coef>& c, int j) {
    if (j < 1) throw std::invalid_argument("adams: j must be >= 1");
    if (j == 1) return c;
    LaurentXY<Coef> r;
    for (const auto& [k, v] : c.terms()) r.add_term(k.first * j, k.second * j, v);
    return r;
}

QPoly to_qpoly(const EPoly& c);
// Fails with NonIntegralResult if any coefficient has a denominator.
EPoly to_epoly(const QPoly& c, const char* where);

// chi_{-y} genus: the specialization x^{1/2} -> 1.
YLaurent chi_y(const EPoly& c);
// Euler characteristic: chi_y followed by y^{1/2} -> -1.
mpz_class euler(const EPoly& c);

// Exact quotient q with q*b == a, in Z[x^{1/2},y^{1/2}] up to monomial shifts.
// Throws NotDivisible if no such quotient exists.
EPoly exact_div(const EPoly& a, const EPoly& b);

// e^{0,0} of the class; 0 or 1 for connected quasi-projective inputs.
inline mpz_class h00(const EPoly& c) { return c.coeff(0, 0); }

std::string to_string(const EPoly& c);

} // namespace motivic
