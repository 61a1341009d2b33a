#include "motivic/epoly.hpp"

#include <algorithm>
#include <sstream>

namespace motivic {

QPoly to_qpoly(const EPoly& c) {
    QPoly r;
    for (const auto& [k, v] : c.terms()) r.add_term(k.first, k.second, mpq_class(v));
    return r;
}

EPoly to_epoly(const QPoly& c, const char* where) {
    EPoly r;
    for (const auto& [k, v] : c.terms()) {
        if (v.get_den() != 1)
            throw NonIntegralResult(std::string(where) + ": coefficient " + v.get_str() +
                                    " at exponent (" + std::to_string(k.first) + "/2," +
                                    std::to_string(k.second) + "/2) is not an integer");
        r.add_term(k.first, k.second, v.get_num());
    }
    return r;
}

YLaurent chi_y(const EPoly& c) {
    YLaurent r;
    for (const auto& [k, v] : c.terms()) r.add_term(k.second, v);
    return r;
}

mpz_class euler(const EPoly& c) {
    mpz_class s = 0;
    for (const auto& [k, v] : c.terms()) s += (k.second % 2 == 0) ? v : -v;
    return s;
}

// Exact division in the Laurent ring. Both operands are shifted into the
// polynomial quadrant, then reduced by the lex-leading term of the divisor;
// under any term order lt(a) = lt(q)*lt(b) whenever q exists, so each step
// either recovers one quotient term exactly or proves indivisibility.
EPoly exact_div(const EPoly& a, const EPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero");
    if (a.is_zero()) return {};

    auto bounds = [](const EPoly& f) {
        int pmin = 0, qmin = 0;
        bool first = true;
        for (const auto& [k, v] : f.terms()) {
            if (first || k.first < pmin) pmin = k.first;
            if (first || k.second < qmin) qmin = k.second;
            first = false;
        }
        return std::pair<int, int>{pmin, qmin};
    };
    const auto [pa, qa] = bounds(a);
    const auto [pb, qb] = bounds(b);

    EPoly rem;
    for (const auto& [k, v] : a.terms()) rem.add_term(k.first - pa, k.second - qa, v);
    EPoly div;
    for (const auto& [k, v] : b.terms()) div.add_term(k.first - pb, k.second - qb, v);

    const auto& ltb = *div.terms().rbegin(); // lex-largest term of the divisor
    EPoly quot;
    while (!rem.is_zero()) {
        const auto& ltr = *rem.terms().rbegin();
        const int dp = ltr.first.first - ltb.first.first;
        const int dq = ltr.first.second - ltb.first.second;
        if (dp < 0 || dq < 0)
            throw NotDivisible("exact_div: leading monomial not divisible");
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ltr.second.get_mpz_t(),
                    ltb.second.get_mpz_t());
        if (r != 0)
            throw NotDivisible("exact_div: leading coefficient not divisible");
        EPoly t = EPoly::monomial(dp, dq, q);
        quot += t;
        rem -= t * div;
    }

    EPoly shifted;
    for (const auto& [k, v] : quot.terms())
        shifted.add_term(k.first + (pa - pb), k.second + (qa - qb), v);
    return shifted;
}

namespace {

std::string exp_str(int e2) {
    if (e2 % 2 == 0) return std::to_string(e2 / 2);
    return std::to_string(e2) + "/2";
}

} // namespace

std::string to_string(const EPoly& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c.terms()) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        mpz_class av = abs(v);
        const bool unit = (av == 1) && !(k.first == 0 && k.second == 0);
        if (!unit) os << av.get_str();
        if (k.first != 0) os << (unit ? "" : "*") << "x^(" << exp_str(k.first) << ")";
        if (k.second != 0)
            os << ((unit && k.first == 0) ? "" : "*") << "y^(" << exp_str(k.second) << ")";
        first = false;
    }
    return os.str();
}

std::string to_string(const YLaurent& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, v] : c.terms()) {
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        mpz_class av = abs(v);
        const bool unit = (av == 1) && e != 0;
        if (!unit) os << av.get_str();
        if (e != 0) os << (unit ? "" : "*") << "y^(" << exp_str(e) << ")";
        first = false;
    }
    return os.str();
}

std::string to_string(const YRational& c) {
    if (c.num.is_zero()) return "0";
    if (c.den == YLaurent::one()) return to_string(c.num);
    return "(" + to_string(c.num) + ") / (" + to_string(c.den) + ")";
}

} // namespace motivic
