#include "tripleint/qseries.hpp"

#include <cmath>

#include "tripleint/errors.hpp"

namespace tripleint {

QPolynomial q_factorial(unsigned a) {
    QPolynomial r = QPolynomial::one();
    for (unsigned i = 1; i <= a; ++i) {
        r *= QPolynomial(std::vector<Int>(i, Int(1))); // [i]_q
    }
    return r;
}

QPolynomial q_binomial(long a, long b) {
    if (a < 0) throw ConfigError("q_binomial requires a >= 0");
    if (b < 0 || b > a) return QPolynomial::zero();
    return qpoly_exact_div(q_factorial(static_cast<unsigned>(a)),
                           q_factorial(static_cast<unsigned>(b)) *
                               q_factorial(static_cast<unsigned>(a - b)));
}

std::vector<QPolynomial> finite_pochhammer_poly(unsigned a) {
    // prod_{i=0}^{a-1} (1 - t q^i), coefficients of t^k
    std::vector<QPolynomial> c{QPolynomial::one()};
    for (unsigned i = 0; i < a; ++i) {
        std::vector<QPolynomial> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k];
            next[k + 1] -= c[k].shifted(i);
        }
        c = std::move(next);
    }
    return c;
}

Laurent1 kadell_expansion(unsigned a, unsigned b) {
    Laurent1 r;
    const long lo = -static_cast<long>(a);
    const long hi = static_cast<long>(b);
    for (long i = lo; i <= hi; ++i) {
        QPolynomial coef =
            q_binomial(static_cast<long>(a + b), static_cast<long>(a) + i)
                .shifted(static_cast<std::size_t>(i * (i + 1) / 2));
        if ((i % 2 + 2) % 2 == 1) coef = -coef;
        r.add_term({static_cast<std::int32_t>(i)}, coef);
    }
    return r;
}

Laurent1 kadell_direct(unsigned a, unsigned b) {
    Laurent1 f = Laurent1::one();
    for (unsigned k = 0; k < b; ++k) {
        // 1 - q^{k+1} x
        Laurent1 factor = Laurent1::one();
        factor.add_term({1}, -QPolynomial::monomial(Int(1), k + 1));
        f *= factor;
    }
    for (unsigned k = 0; k < a; ++k) {
        // 1 - q^k x^{-1}
        Laurent1 factor = Laurent1::one();
        factor.add_term({-1}, -QPolynomial::monomial(Int(1), k));
        f *= factor;
    }
    return f;
}

QContext::QContext(double q_, double eps) : q(q_), truncation_epsilon(eps) {
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("QContext requires 0 < q < 1");
    if (!(eps > 0.0)) throw ConfigError("QContext requires truncation_epsilon > 0");
}

int QContext::truncation_index(double abs_x) const {
    const double bound = truncation_epsilon * (1.0 - q);
    const double m = std::max(1.0, abs_x);
    int k = static_cast<int>(std::ceil(std::log(bound / m) / std::log(q)));
    return std::max(k, 1);
}

namespace {

// prod_{i=0}^{K-1} (1 - z q^i). A vanishing factor is a zero of the product,
// not an error; poles are flagged by the callers on denominator products.
Complex truncated_product(Complex z, double q, int K) {
    Complex prod = 1.0;
    Complex zq = z;
    for (int i = 0; i < K; ++i) {
        prod *= 1.0 - zq;
        zq *= q;
    }
    return prod;
}

} // namespace

Complex pochhammer_numeric(Complex x, Complex a, const QContext& ctx) {
    const double lnq = std::log(ctx.q);
    const Complex qa = std::exp(a * lnq);
    const Complex xqa = x * qa;
    const int K = ctx.truncation_index(std::max(std::abs(x), std::abs(xqa)));
    const Complex num = truncated_product(x, ctx.q, K);
    const Complex den = truncated_product(xqa, ctx.q, K);
    if (std::abs(den) < 1e-280)
        throw PoleEncountered("(x q^a; q)_inf vanished: pole of (x;q)_a");
    return num / den;
}

Complex q_gamma(Complex x, const QContext& ctx) {
    const double lnq = std::log(ctx.q);
    const Complex qx = std::exp(x * lnq);
    const int K = ctx.truncation_index(1.0);
    const Complex num = truncated_product(Complex(ctx.q, 0.0), ctx.q, K);
    const Complex den = truncated_product(qx, ctx.q, K);
    if (std::abs(den) < 1e-280)
        throw PoleEncountered("Gamma_q pole");
    return std::exp((1.0 - x) * std::log(1.0 - ctx.q)) * num / den;
}

} // namespace tripleint
