#ifndef TRIPLEINT_QSERIES_HPP
#define TRIPLEINT_QSERIES_HPP

#include <complex>
#include <vector>

#include "tripleint/laurent.hpp"
#include "tripleint/qpolynomial.hpp"

namespace tripleint {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Exact q-combinatorics
// ---------------------------------------------------------------------------

/// [a]!_q = prod_{i=1}^{a} (1 + q + ... + q^{i-1}); degree a(a-1)/2.
QPolynomial q_factorial(unsigned a);

/// Gaussian binomial [a choose b]_q; the zero polynomial when b < 0 or b > a.
/// Evaluated by exact division of q-factorials.
QPolynomial q_binomial(long a, long b);

/// Coefficients of prod_{i=0}^{a-1}(1 - t q^i) as polynomials in q,
/// indexed by the power of the formal variable t.
std::vector<QPolynomial> finite_pochhammer_poly(unsigned a);

/// Kadell's expansion sum_{i=-a}^{b} q^{i(i+1)/2} [a+b choose a+i]_q (-x)^i
/// as a Laurent polynomial in x over Z[q].
Laurent1 kadell_expansion(unsigned a, unsigned b);

/// The product (qx;q)_b (x^{-1};q)_a expanded directly; the independent
/// companion of kadell_expansion.
Laurent1 kadell_direct(unsigned a, unsigned b);

// ---------------------------------------------------------------------------
// Numeric q-analysis, 0 < q < 1
// ---------------------------------------------------------------------------

struct QContext {
    double q;
    double truncation_epsilon = 1e-14;

    QContext(double q_, double eps = 1e-14);

    /// Truncation index: first K with q^K * max(1,|x|) < eps * (1-q).
    int truncation_index(double abs_x) const;
};

/// (x;q)_a = (x;q)_inf / (x q^a;q)_inf with both products truncated at the
/// same index; q^a uses the principal real logarithm of q.
Complex pochhammer_numeric(Complex x, Complex a, const QContext& ctx);

/// Gamma_q(x) = (1-q)^{1-x} (q;q)_inf / (q^x;q)_inf.
Complex q_gamma(Complex x, const QContext& ctx);

} // namespace tripleint

#endif
