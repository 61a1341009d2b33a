#include "motivic/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace motivic {

QSeq qs_mul(const QSeq& a, const QSeq& b) {
    const size_t n = std::min(a.size(), b.size());
    QSeq r(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

QSeq qs_inv(const QSeq& a) {
    if (a.empty() || a[0] == 0) throw std::invalid_argument("qs_inv: zero constant term");
    QSeq r(a.size());
    r[0] = 1 / a[0];
    for (size_t n = 1; n < a.size(); ++n) {
        mpq_class s = 0;
        for (size_t j = 1; j <= n; ++j) s += a[j] * r[n - j];
        r[n] = -s / a[0];
    }
    return r;
}

QSeq qs_exp(const QSeq& a) {
    if (!a.empty() && a[0] != 0)
        throw std::invalid_argument("qs_exp: nonzero constant term");
    QSeq r(a.size());
    if (a.empty()) return r;
    r[0] = 1;
    // E' = a' E  =>  n E_n = sum_{k=1}^{n} k a_k E_{n-k}
    for (size_t n = 1; n < a.size(); ++n) {
        mpq_class s = 0;
        for (size_t k = 1; k <= n; ++k) s += mpq_class(static_cast<long>(k)) * a[k] * r[n - k];
        r[n] = s / static_cast<long>(n);
    }
    return r;
}

QSeq qs_log(const QSeq& a) {
    if (a.empty() || a[0] != 1)
        throw std::invalid_argument("qs_log: constant term must be 1");
    QSeq r(a.size());
    // n c_n = n a_n - sum_{j=1}^{n-1} j c_j a_{n-j}
    for (size_t n = 1; n < a.size(); ++n) {
        mpq_class s = mpq_class(static_cast<long>(n)) * a[n];
        for (size_t j = 1; j < n; ++j) s -= mpq_class(static_cast<long>(j)) * r[j] * a[n - j];
        r[n] = s / static_cast<long>(n);
    }
    return r;
}

QSeq qs_pow_zint(const QSeq& a, long e) {
    QSeq base = e >= 0 ? a : qs_inv(a);
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    QSeq r(a.size());
    if (!r.empty()) r[0] = 1;
    while (k) {
        if (k & 1ul) r = qs_mul(r, base);
        if (k > 1) base = qs_mul(base, base);
        k >>= 1ul;
    }
    return r;
}

} // namespace motivic
