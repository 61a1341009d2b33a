#pragma once

#include <gmpxx.h>

#include <vector>

namespace motivic {

// Dense truncated series over Q; index = power of t, size = order + 1.
using QSeq = std::vector<mpq_class>;

QSeq qs_mul(const QSeq& a, const QSeq& b);
// Multiplicative inverse; a[0] must be nonzero.
QSeq qs_inv(const QSeq& a);
// exp of a series with zero constant term.
QSeq qs_exp(const QSeq& a);
// log of a series with constant term 1.
QSeq qs_log(const QSeq& a);
// Integer power (negative allowed); a[0] must be nonzero.
QSeq qs_pow_zint(const QSeq& a, long e);

} // namespace motivic
