#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace motivic {

// Laurent polynomial in y^{1/2} over Z; exponents stored doubled so the
// key e2 stands for y^{e2/2}. Houses chi_{-y} genera.
class YLaurent {
public:
    using map_type = std::map<int, mpz_class>;

    YLaurent() = default;

    static YLaurent constant(mpz_class c) { return monomial(0, std::move(c)); }
    static YLaurent one() { return constant(1); }
    static YLaurent monomial(int e2, mpz_class c = 1) {
        YLaurent r;
        if (c != 0) r.t_[e2] = std::move(c);
        return r;
    }
    // 1 + y + ... + y^{m-1}
    static YLaurent geometric(int m) {
        YLaurent r;
        for (int i = 0; i < m; ++i) r.t_[2 * i] = 1;
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    const map_type& terms() const { return t_; }
    mpz_class coeff(int e2) const {
        auto it = t_.find(e2);
        return it == t_.end() ? mpz_class(0) : it->second;
    }

    void add_term(int e2, const mpz_class& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(e2, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    YLaurent operator-() const {
        YLaurent r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    YLaurent& operator+=(const YLaurent& o) {
        for (const auto& [e, c] : o.t_) add_term(e, c);
        return *this;
    }
    friend YLaurent operator+(YLaurent a, const YLaurent& b) { return a += b; }
    friend YLaurent operator-(YLaurent a, const YLaurent& b) { return a += -b; }
    friend YLaurent operator*(const YLaurent& a, const YLaurent& b) {
        YLaurent r;
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    YLaurent& operator*=(const YLaurent& o) { return *this = *this * o; }
    YLaurent& scale(const mpz_class& c) {
        if (c == 0) { t_.clear(); return *this; }
        for (auto& [e, v] : t_) v *= c;
        return *this;
    }
    YLaurent pow(unsigned e) const {
        YLaurent r = one(), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b = e > 1 ? b * b : b;
            e >>= 1u;
        }
        return r;
    }
    // y -> y^k on exponents.
    YLaurent subst_pow(int k) const {
        YLaurent r;
        for (const auto& [e, c] : t_) r.t_[e * k] = c;
        return r;
    }

    // y^{1/2} -> -1, i.e. each term c*y^{e2/2} contributes c*(-1)^{e2}.
    mpz_class euler() const {
        mpz_class s = 0;
        for (const auto& [e, c] : t_) s += (e % 2 == 0) ? c : -c;
        return s;
    }
    // Value at y = 1 (only meaningful for integer exponents).
    mpz_class at_one() const {
        mpz_class s = 0;
        for (const auto& [e, c] : t_) s += c;
        return s;
    }

    friend bool operator==(const YLaurent& a, const YLaurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const YLaurent& a, const YLaurent& b) { return !(a == b); }

private:
    map_type t_;
};

// Formal ratio of YLaurents; equality by cross-multiplication, never reduced.
struct YRational {
    YLaurent num;
    YLaurent den = YLaurent::one();

    YRational() = default;
    YRational(YLaurent n) : num(std::move(n)) {}
    YRational(YLaurent n, YLaurent d) : num(std::move(n)), den(std::move(d)) {}

    bool is_zero() const { return num.is_zero(); }

    friend YRational operator+(const YRational& a, const YRational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend YRational operator*(const YRational& a, const YRational& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend bool operator==(const YRational& a, const YRational& b) {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator!=(const YRational& a, const YRational& b) { return !(a == b); }
};

std::string to_string(const YLaurent& c);
std::string to_string(const YRational& c);

} // namespace motivic
