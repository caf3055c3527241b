#include "tripleint/ct_identities.hpp"

#include <algorithm>
#include <sstream>

#include "tripleint/errors.hpp"

namespace tripleint {

std::string NaturalTriple::str() const {
    std::ostringstream out;
    out << "(" << a1 << "," << a2 << "," << a3 << ")";
    return out.str();
}

Permutation3::Permutation3(std::array<int, 3> images) : img(images) {
    std::array<int, 3> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2})
        throw ConfigError("Permutation3 images must be a bijection of {0,1,2}");
}

std::string Permutation3::str() const {
    std::ostringstream out;
    out << img[0] + 1 << img[1] + 1 << img[2] + 1;
    return out.str();
}

const std::array<Permutation3, 6>& Permutation3::all() {
    static const std::array<Permutation3, 6> perms = {
        Permutation3({0, 1, 2}), Permutation3({0, 2, 1}), Permutation3({1, 0, 2}),
        Permutation3({1, 2, 0}), Permutation3({2, 0, 1}), Permutation3({2, 1, 0})};
    return perms;
}

namespace {

// (q^{shift} y_i / y_j; q)_m as a 3-variable Laurent polynomial.
Laurent3 pochhammer_factor(int i, int j, unsigned m, unsigned shift) {
    Laurent3 f = Laurent3::one();
    Laurent3::Exponents e{};
    e[i] = 1;
    e[j] = -1;
    for (unsigned k = 0; k < m; ++k) {
        Laurent3 factor = Laurent3::one();
        factor.add_term(e, -QPolynomial::monomial(Int(1), k + shift));
        f *= factor;
    }
    return f;
}

// Multiply homogeneous 3-variable factors in the reduced 2-variable space
// (y3 = 1) and return the constant term. Homogeneity is checked per factor
// inside reduce_homogeneous, which carries over to the product.
QPolynomial reduced_product_ct(const std::vector<Laurent3>& factors) {
    Laurent2 prod = Laurent2::one();
    for (const auto& f : factors) prod *= reduce_homogeneous(f);
    return prod.constant_term();
}

Rational as_rational(const Int& n) { return Rational(n); }

} // namespace

Rational dyson_ct_lhs(const NaturalTriple& a) {
    std::vector<Laurent3> factors;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const unsigned m = a.complement(i, j);
            // (1 - y_i/y_j)^m (1 - y_j/y_i)^m: Pochhammer factors at q-shift 0
            // collapse to plain binomial powers.
            factors.push_back(pochhammer_factor(i, j, m, 0));
            factors.push_back(pochhammer_factor(j, i, m, 0));
        }
    }
    const QPolynomial ct = reduced_product_ct(factors);
    if (ct.degree() > 0)
        throw std::logic_error("Dyson constant term picked up a q dependence");
    const Rational value = as_rational(ct.coefficient(0));
    if (value < 0) throw std::logic_error("Dyson constant term must be nonnegative");
    return value;
}

Rational dyson_rhs(const NaturalTriple& a) {
    Int num = factorial(a.sum());
    for (int i = 0; i < 3; ++i) num *= factorial(2ul * a[i]);
    Int den(1);
    for (int i = 0; i < 3; ++i) den *= factorial(a[i]);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) den *= factorial(a[i] + a[j]);
    Rational r = Rational(num) / Rational(den);
    if (!is_integer(r)) throw std::logic_error("Dyson right side must be an integer");
    return r;
}

Rational dyson_dixon_route(const NaturalTriple& a) {
    const long m = std::min({a.a1, a.a2, a.a3});
    Int sum(0);
    for (long n = -m; n <= m; ++n) {
        Int term = binomial(2L * a.a1, a.a1 + n) * binomial(2L * a.a2, a.a2 + n) *
                   binomial(2L * a.a3, a.a3 + n);
        if ((n & 1L) != 0) term = -term;
        sum += term;
    }
    return as_rational(sum);
}

QPolynomial morris_ct_lhs(const NaturalTriple& a, const Permutation3& sigma) {
    // Product layout (one-based indices):
    //   (y1/y2;q)_{a3}       (q y2/y1;q)_{a_sigma(3)}
    //   (y2/y3;q)_{a1}       (q y3/y2;q)_{a_sigma(1)}
    //   (y1/y3;q)_{a_sigma(2)} (q y3/y1;q)_{a2}
    // The (1,3) pair carries the permuted label on the plain factor; this is
    // the arrangement whose Kadell reduction gives brackets
    // [a_i + a_sigma(i); a_i + n]_q for i = 1,2,3.
    std::vector<Laurent3> factors;
    factors.push_back(pochhammer_factor(0, 1, a[2], 0));
    factors.push_back(pochhammer_factor(1, 0, a[sigma(2)], 1));
    factors.push_back(pochhammer_factor(1, 2, a[0], 0));
    factors.push_back(pochhammer_factor(2, 1, a[sigma(0)], 1));
    factors.push_back(pochhammer_factor(0, 2, a[sigma(1)], 0));
    factors.push_back(pochhammer_factor(2, 0, a[1], 1));
    return reduced_product_ct(factors);
}

QPolynomial morris_rhs(const NaturalTriple& a, const Permutation3& sigma) {
    QPolynomial num = q_factorial(a.sum());
    for (int i = 0; i < 3; ++i) num *= q_factorial(a[i] + a[sigma(i)]);
    QPolynomial den = QPolynomial::one();
    for (int i = 0; i < 3; ++i) den *= q_factorial(a[i]);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) den *= q_factorial(a[i] + a[j]);
    return qpoly_exact_div(num, den);
}

Rational dixon_lhs(unsigned a, unsigned b, unsigned c) {
    const long m = std::min({a, b, c});
    Int sum(0);
    for (long n = -m; n <= m; ++n) {
        Int term = binomial(static_cast<long>(a + b), a + n) *
                   binomial(static_cast<long>(b + c), b + n) *
                   binomial(static_cast<long>(a + c), c + n);
        if ((n & 1L) != 0) term = -term;
        sum += term;
    }
    return as_rational(sum);
}

Rational dixon_rhs(unsigned a, unsigned b, unsigned c) {
    Rational r = Rational(factorial(a + b + c)) /
                 Rational(factorial(a) * factorial(b) * factorial(c));
    if (!is_integer(r)) throw std::logic_error("Dixon right side must be an integer");
    return r;
}

namespace {

// sum_n (-1)^n q^{n(3n+1)/2} [t1, o1+n][t2, o2+n][t3, o3+n]; n(3n+1)/2 >= 0
// for every integer n, so each summand stays in Z[q]. Outside
// [-min(o_i), min(t_i-o_i)] some bracket vanishes by the zero convention.
QPolynomial q_dixon_sum(long t1, long o1, long t2, long o2, long t3, long o3) {
    const long lo = -std::min({o1, o2, o3});
    const long hi = std::min({t1 - o1, t2 - o2, t3 - o3});
    QPolynomial sum;
    for (long n = lo; n <= hi; ++n) {
        QPolynomial term = q_binomial(t1, o1 + n) * q_binomial(t2, o2 + n) *
                           q_binomial(t3, o3 + n);
        if (term.is_zero()) continue;
        term = term.shifted(static_cast<std::size_t>(n * (3 * n + 1) / 2));
        if ((n & 1L) != 0) term = -term;
        sum += term;
    }
    return sum;
}

} // namespace

QPolynomialPair q_dixon_v1(unsigned a, unsigned b, unsigned c) {
    QPolynomialPair r;
    r.lhs = q_dixon_sum(a + b, a, b + c, b, c + a, c);
    r.rhs = qpoly_exact_div(q_factorial(a + b + c),
                            q_factorial(a) * q_factorial(b) * q_factorial(c));
    return r;
}

QPolynomialPair q_dixon_v2(unsigned a, unsigned b, unsigned c) {
    QPolynomialPair r;
    r.lhs = q_dixon_sum(2L * a, a, 2L * b, b, 2L * c, c);
    QPolynomial num =
        q_factorial(2 * a) * q_factorial(2 * b) * q_factorial(2 * c) * q_factorial(a + b + c);
    QPolynomial den = q_factorial(a) * q_factorial(b) * q_factorial(c) *
                      q_factorial(a + b) * q_factorial(b + c) * q_factorial(a + c);
    r.rhs = qpoly_exact_div(num, den);
    return r;
}

QPolynomial ct_derivation_diagonal(const NaturalTriple& abc) {
    const unsigned a = abc.a1, b = abc.a2, c = abc.a3;
    // Direct product expansions of the three Kadell pairs, not the bracket
    // sums, so the route is independent of q_dixon_v2.
    const Laurent1 Ka = kadell_direct(a, a);
    const Laurent1 Kb = kadell_direct(b, b);
    const Laurent1 Kc = kadell_direct(c, c);
    const long m = std::min({a, b, c});
    QPolynomial diag;
    for (long i = -m; i <= m; ++i) {
        auto coeff = [i](const Laurent1& k) {
            auto it = k.terms().find({static_cast<std::int32_t>(i)});
            return it == k.terms().end() ? QPolynomial() : it->second;
        };
        QPolynomial term = coeff(Ka) * coeff(Kb) * coeff(Kc);
        if (term.is_zero()) continue;
        // weight q^{-i}; for i > 0 the product is divisible by q^i
        diag += (i >= 0) ? term.unshifted(static_cast<std::size_t>(i))
                         : term.shifted(static_cast<std::size_t>(-i));
    }
    return diag;
}

bool ct_derivation_check(const NaturalTriple& abc) {
    return ct_derivation_diagonal(abc) == q_dixon_v2(abc.a1, abc.a2, abc.a3).lhs;
}

std::vector<Int> phi_polynomial(unsigned a) {
    std::vector<Int> coeffs(a + 1);
    for (unsigned i = 0; i <= a; ++i) {
        const Int b = binomial(a, i);
        coeffs[i] = b * b;
    }
    return coeffs;
}

std::pair<Rational, Rational> binomial_convolution(const NaturalTriple& a) {
    Int lhs(0);
    for (unsigned i = 0; i <= a.a3; ++i)
        lhs += binomial(a.a1 + i, a.a1) * binomial(a.a2 + a.a3 - i, a.a2);
    const Int rhs = binomial(static_cast<long>(a.sum()) + 1, a.a3);
    return {as_rational(lhs), as_rational(rhs)};
}

Rational complex_exact_eval(const NaturalTriple& a) {
    // Route A: Eq (5.3.2) with the convolution summed explicitly.
    const Int g3 = factorial(a.a3);
    Rational prefactor = Rational(g3 * g3 * factorial(a.a1) * factorial(a.a2)) /
                         Rational(factorial(a.a2 + a.a3 + 1) * factorial(a.a1 + a.a3 + 1));
    Int conv(0);
    for (unsigned i = 0; i <= a.a3; ++i)
        conv += binomial(a.a1 + i, a.a1) * binomial(a.a2 + a.a3 - i, a.a2);
    const Rational route_a = prefactor * Rational(conv);

    // Route B: the Gamma ratio of Eq (5.3.1) at integer arguments.
    const Rational route_b =
        Rational(factorial(a.sum() + 1) * factorial(a.a1) * factorial(a.a2) * factorial(a.a3)) /
        Rational(factorial(a.a1 + a.a2 + 1) * factorial(a.a1 + a.a3 + 1) *
                 factorial(a.a2 + a.a3 + 1));

    if (route_a != route_b)
        throw RouteMismatch("complex_exact_eval: (5.3.2)+Lemma 5.4 route != Gamma ratio at a=" +
                            a.str());
    return route_a;
}

} // namespace tripleint
