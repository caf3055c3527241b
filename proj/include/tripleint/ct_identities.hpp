#ifndef TRIPLEINT_CT_IDENTITIES_HPP
#define TRIPLEINT_CT_IDENTITIES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tripleint/laurent.hpp"
#include "tripleint/qpolynomial.hpp"
#include "tripleint/qseries.hpp"
#include "tripleint/rational.hpp"

namespace tripleint {

struct NaturalTriple {
    unsigned a1 = 0, a2 = 0, a3 = 0;

    unsigned operator[](int i) const { return i == 0 ? a1 : (i == 1 ? a2 : a3); }
    unsigned sum() const { return a1 + a2 + a3; }
    /// a_{ij} = a_k where {k} = {1,2,3} \ {i,j}; i, j zero-based and distinct.
    unsigned complement(int i, int j) const { return (*this)[3 - i - j]; }
    std::string str() const;
};

/// A permutation of {0,1,2} by its images.
struct Permutation3 {
    std::array<int, 3> img{0, 1, 2};

    explicit Permutation3(std::array<int, 3> images);
    Permutation3() = default;

    int operator()(int i) const { return img[i]; }
    bool is_identity() const { return img == std::array<int, 3>{0, 1, 2}; }
    std::string str() const;

    static const std::array<Permutation3, 6>& all();
};

// ---------------------------------------------------------------------------
// Dyson (Thm 3.1 / Eq (1.2.3))
// ---------------------------------------------------------------------------

/// CT prod_{i<j} (1 - y_i/y_j)^{a_ij} (1 - y_j/y_i)^{a_ij} by exact expansion.
Rational dyson_ct_lhs(const NaturalTriple& a);

/// (a1+a2+a3)! prod (2a_i)! / (prod a_i! prod_{i<j} (a_i+a_j)!).
Rational dyson_rhs(const NaturalTriple& a);

/// The alternating binomial route of the CT proof:
/// sum_n (-1)^n binom(2a1,a1+n) binom(2a2,a2+n) binom(2a3,a3+n).
Rational dyson_dixon_route(const NaturalTriple& a);

// ---------------------------------------------------------------------------
// Morris / q-Dyson (Thm 1.4, Eq (1.4.2))
// ---------------------------------------------------------------------------

/// Exact CT of the q-deformed product with permuted second-factor labels.
/// With sigma the identity this is the left side of (1.4.1).
QPolynomial morris_ct_lhs(const NaturalTriple& a, const Permutation3& sigma);

/// [a1+a2+a3]!_q prod_i [a_i + a_sigma(i)]!_q over the denominator
/// q-factorials, evaluated by exact polynomial division.
QPolynomial morris_rhs(const NaturalTriple& a, const Permutation3& sigma);

// ---------------------------------------------------------------------------
// Dixon and q-Dixon
// ---------------------------------------------------------------------------

Rational dixon_lhs(unsigned a, unsigned b, unsigned c);
Rational dixon_rhs(unsigned a, unsigned b, unsigned c);

struct QPolynomialPair {
    QPolynomial lhs, rhs;
};

/// Lemma 4.3 (i): brackets [a+b, a+n][b+c, b+n][c+a, c+n].
QPolynomialPair q_dixon_v1(unsigned a, unsigned b, unsigned c);
/// Lemma 4.3 (ii): brackets [2a, a+n][2b, b+n][2c, c+n].
QPolynomialPair q_dixon_v2(unsigned a, unsigned b, unsigned c);

/// The constrained constant term of
/// F_q(u,v,w) = (qu;q)_a (u^{-1};q)_a (qv;q)_b (v^{-1};q)_b (qw;q)_c (w^{-1};q)_c
/// under uvw = q^{-1}: the sum over i of the u^i v^i w^i coefficients
/// weighted by q^{-i}, with the factors expanded as direct products.
QPolynomial ct_derivation_diagonal(const NaturalTriple& abc);

/// Compares ct_derivation_diagonal against the q-Dixon (ii) sum.
bool ct_derivation_check(const NaturalTriple& abc);

// ---------------------------------------------------------------------------
// The complex-case exact layer (§5)
// ---------------------------------------------------------------------------

/// Coefficients of phi_a(r1,r2) = sum_i binom(a,i)^2 r1^{2i} r2^{2a-2i},
/// indexed by i.
std::vector<Int> phi_polynomial(unsigned a);

/// Lemma 5.4: (lhs by summation, rhs = binom(a1+a2+a3+1, a3)).
std::pair<Rational, Rational> binomial_convolution(const NaturalTriple& a);

/// The coefficient of pi^2 in I_{C;2}(a) for natural a, computed by two
/// routes (the phi/Beta expansion (5.3.2)+Lemma 5.4 and the Gamma ratio of
/// (5.3.1)); throws RouteMismatch if they differ.
Rational complex_exact_eval(const NaturalTriple& a);

} // namespace tripleint

#endif
