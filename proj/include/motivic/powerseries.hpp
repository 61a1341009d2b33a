#pragma once

#include "motivic/epoly.hpp"
#include "motivic/series.hpp"

namespace motivic {

using ESeries = Series<EPoly>;
using QSeries = Series<QPoly>;

// (1 - x^{p2/2} y^{q2/2} t^k)^{-e}, truncated at order N. This is the
// elementary factor every product formula is assembled from.
ESeries geometric_factor(int p2, int q2, const mpz_class& e, int k, int N);

// Kapranov zeta function of a class: the series of its symmetric powers,
// computed by the monomial product rule.
ESeries zeta_series(const EPoly& c, int N);
// Zeta function evaluated at t^k, truncated at N.
ESeries zeta_series_tk(const EPoly& c, int k, int N);

// E-class of the n-th symmetric power via the partition sum over Adams
// operations (Macdonald). Independent of the zeta-product route.
EPoly sym_class(const EPoly& c, int n);

// Unique factorization A = prod_k zeta_{c_k}(t^k); returns sum c_k t^k.
ESeries pleth_log(const ESeries& a);

// Plethystic exponential: exp(sum_j psi_j(f)/j) with psi_j acting on x, y
// and t simultaneously. Computed over Q; integrality of the result asserted.
ESeries pleth_exp(const ESeries& f);

// Power-structure exponentiation A^M := pleth_exp(M * pleth_log(A)).
ESeries power_exp(const ESeries& a, const EPoly& m);
// Same value assembled as prod_k zeta_{M c_k}(t^k); the two implementations
// must agree bit-exactly and the test suite enforces that.
ESeries power_exp_zeta(const ESeries& a, const EPoly& m);

// Substitution t -> m * t^k for a single-term m, re-truncated at the input
// order.
ESeries subst_t(const ESeries& a, const EPoly& m, int k);

// Euler specialization applied coefficient-wise.
std::vector<mpz_class> euler_series(const ESeries& a);

} // namespace motivic
