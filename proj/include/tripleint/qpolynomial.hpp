#ifndef TRIPLEINT_QPOLYNOMIAL_HPP
#define TRIPLEINT_QPOLYNOMIAL_HPP

#include <complex>
#include <string>
#include <vector>

#include "tripleint/rational.hpp"

namespace tripleint {

/// Univariate polynomial in q over arbitrary-precision integers.
///
/// Coefficients are stored from q^0 upward with a nonzero leading
/// coefficient; the zero polynomial is the empty coefficient vector.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(Int constant);
    explicit QPolynomial(std::vector<Int> coeffs);

    static QPolynomial zero() { return QPolynomial(); }
    static QPolynomial one() { return QPolynomial(Int(1)); }
    /// c * q^k
    static QPolynomial monomial(Int c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int coefficient(std::size_t k) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial& operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Multiply by q^k.
    QPolynomial shifted(std::size_t k) const;
    /// Divide by q^k; throws NonDivisible if any of the k lowest coefficients
    /// is nonzero.
    QPolynomial unshifted(std::size_t k) const;

    Int evaluate_at_one() const;
    Rational evaluate(const Rational& q) const;
    double evaluate(double q) const;
    std::complex<double> evaluate(std::complex<double> q) const;

    /// Canonical rendering "c0 + c1*q + c2*q^2 + ..." skipping zero terms;
    /// "0" for the zero polynomial. Coefficients keep their sign.
    std::string str() const;

  private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// Exact quotient num/den; throws NonDivisible if the remainder is nonzero,
/// DivisionByZero if den is zero.
QPolynomial qpoly_exact_div(const QPolynomial& num, const QPolynomial& den);

} // namespace tripleint

#endif
