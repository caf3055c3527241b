#include "tripleint/qpolynomial.hpp"

#include <sstream>

namespace tripleint {

QPolynomial::QPolynomial(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

QPolynomial QPolynomial::monomial(Int c, std::size_t k) {
    QPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(k + 1, Int(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int QPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Int(0);
}

QPolynomial QPolynomial::operator-() const {
    QPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Int(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return QPolynomial();
    QPolynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

QPolynomial QPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    QPolynomial r;
    r.coeffs_.assign(coeffs_.size() + k, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

QPolynomial QPolynomial::unshifted(std::size_t k) const {
    if (k == 0 || is_zero()) return *this;
    if (coeffs_.size() < k)
        throw NonDivisible("polynomial not divisible by q^" + std::to_string(k));
    for (std::size_t i = 0; i < k; ++i)
        if (coeffs_[i] != 0)
            throw NonDivisible("polynomial not divisible by q^" + std::to_string(k));
    QPolynomial r;
    r.coeffs_.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
    return r;
}

Int QPolynomial::evaluate_at_one() const {
    Int s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
}

Rational QPolynomial::evaluate(const Rational& q) const {
    Rational s(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * q + Rational(*it);
    return s;
}

double QPolynomial::evaluate(double q) const {
    double s = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * q + it->get_d();
    return s;
}

std::complex<double> QPolynomial::evaluate(std::complex<double> q) const {
    std::complex<double> s = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * q + it->get_d();
    return s;
}

std::string QPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            out << coeffs_[k].get_str();
        } else {
            out << coeffs_[k].get_str() << "*q";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

QPolynomial qpoly_exact_div(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (num.is_zero()) return QPolynomial();
    if (num.degree() < den.degree())
        throw NonDivisible("quotient degree would be negative");

    std::vector<Int> rem = num.coefficients();
    const std::vector<Int>& d = den.coefficients();
    const std::size_t qsize = rem.size() - d.size() + 1;
    std::vector<Int> quot(qsize, Int(0));

    // Long division from the top; every step must divide exactly.
    for (std::size_t step = 0; step < qsize; ++step) {
        const std::size_t top = rem.size() - 1 - step;
        const std::size_t shift = top - (d.size() - 1);
        if (rem[top] == 0) continue;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem[top].get_mpz_t(),
                    d.back().get_mpz_t());
        if (r != 0) throw NonDivisible("leading coefficient does not divide");
        quot[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i) rem[shift + i] -= c * d[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw NonDivisible("nonzero remainder in exact division");
    return QPolynomial(std::move(quot));
}

} // namespace tripleint
