#ifndef TRIPLEINT_PADIC_HPP
#define TRIPLEINT_PADIC_HPP

#include <complex>
#include <optional>

#include "tripleint/rational.hpp"

namespace tripleint {

using Complex = std::complex<double>;

/// Prime and oracle truncation depths. Cells of the brute-force integrator
/// are the cosets x0 + p^N Z_p inside p^{-M} Z_p.
struct PAdicContext {
    long p;
    int outer_depth = 5; // M
    int inner_depth = 8; // N

    PAdicContext(long p_, int M, int N);
    static PAdicContext defaults(long p_);
};

/// v_p of an exact rational; nullopt encodes v_p(0) = +infinity.
std::optional<long> valuation(const Rational& x, long p);

/// |x|_p = p^{-v_p(x)}, |0|_p = 0, as an exact rational.
Rational norm_p(const Rational& x, long p);

/// psi_p(x) = max{|x|_p, 1}.
Rational psi_p(const Rational& x, long p);

// ---------------------------------------------------------------------------
// Gamma_{Q_p}(s) = (1 - p^{-1}) / (1 - p^{-s})
// ---------------------------------------------------------------------------

/// Exact value at integer s != 0.
Rational gamma_qp_exact(long s, long p);
/// Gamma_{Q_p}(infinity) = 1 - p^{-1}.
Rational gamma_qp_infinity(long p);
/// Complex-argument value; throws PoleEncountered when p^{-s} = 1.
Complex gamma_qp(Complex s, long p);

// ---------------------------------------------------------------------------
// The hypergeometric F(a,c;y) = int psi_p(x)^a |x-y|_p^c dx
// ---------------------------------------------------------------------------

/// Convergence region: Re(c) > -1 and Re(a+c) < -1.
void check_f_convergence(Complex a, Complex c);

/// Closed form of F. For v_p(y) >= 0 this is Gamma(c+1) - Gamma(a+c+1);
/// for v_p(y) = n < 0 the four-term formula
///   p^{-(n+1)(c+1)-na} Gamma(c+1) - p^{-n(a+c+1)} Gamma(a+c+1)
///   + p^{-nc} Gamma(inf) [ 1/Gamma(n(a+1)+1) - Gamma(a+1)/Gamma(n(a+1)) ].
Complex f_closed(Complex a, Complex c, const Rational& y, long p);

/// Exact variant for integer exponents in the convergence region.
Rational f_closed_exact(long a, long c, const Rational& y, long p);

struct OracleResult {
    Complex value;
    double tail_bound;
};

struct OracleResultExact {
    Rational value;
    Rational tail_bound;
};

/// Brute-force F by coset enumeration: sums the locally constant integrand
/// over all p^{M+N} cells x0 + p^N Z_p inside p^{-M} Z_p, skipping the cell
/// containing y; that cell and the outer region |x|_p > p^M enter the
/// returned rigorous tail bound instead.
OracleResult f_oracle(Complex a, Complex c, const Rational& y, const PAdicContext& ctx);

/// Same enumeration with exact rational arithmetic (integer exponents).
OracleResultExact f_oracle_exact(long a, long c, const Rational& y, const PAdicContext& ctx);

// ---------------------------------------------------------------------------
// The double integral J(a,b,c) = int int psi^a psi^b |x-y|^c  (Thm 2.4)
// ---------------------------------------------------------------------------

/// Convergence: F conditions for (a,c) and (b,c), plus Re(a+b+c) < -2.
void check_j_convergence(Complex a, Complex b, Complex c);

/// The closed Gamma_{Q_p} ratio of Eq (2.4.1).
Complex j_closed(Complex a, Complex b, Complex c, long p);
Rational j_closed_exact(long a, long b, long c, long p);

/// Layered oracle: outer integral over y by valuation shells v_p(y) in
/// [-M, 0], with f_closed per shell (the n >= 0 shells sum exactly to the
/// single case-(i) value); shells below -M contribute a geometric tail bound.
OracleResult j_oracle(Complex a, Complex b, Complex c, const PAdicContext& ctx);
OracleResultExact j_oracle_exact(long a, long b, long c, const PAdicContext& ctx);

// ---------------------------------------------------------------------------
// The triple integral (Thm 1.9)
// ---------------------------------------------------------------------------

struct TripleResult {
    Complex i_tilde;  // Eq (1.9.2)
    Complex i_full;   // (1 + p^{-1}) * i_tilde, Eq (1.9.1)
};

/// Evaluates Eq (1.9.2) as a Gamma ratio and cross-checks it against
/// j_closed at the parameter dictionary (a,b,c) = (-2s1, -2s2, -1-nu3);
/// throws RouteMismatch if the two disagree beyond roundoff.
TripleResult triple_closed(Complex s1, Complex s2, Complex s3, long p);

// ---------------------------------------------------------------------------
// Moebius action (§2.5)
// ---------------------------------------------------------------------------

struct Mat2 {
    Rational a, b, c, d;
    Rational det() const { return a * d - b * c; }
};

/// (a z + b) / (c z + d); throws DivisionByZero when cz + d = 0.
Rational moebius_act(const Mat2& g, const Rational& z);

/// The matrix k(y) of §2.5: upper-triangular shift for y in Z_p, the
/// inversion-type matrix with a(y) = 1/y otherwise. k(y) * y = 0, det 1,
/// entries in Z_p.
Mat2 k_matrix(const Rational& y, long p);

} // namespace tripleint

#endif
