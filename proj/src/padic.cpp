#include "tripleint/padic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "tripleint/errors.hpp"

namespace tripleint {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long valuation_int(Int n, long p) {
    // n != 0
    unsigned long v = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
    return static_cast<long>(v);
}

long valuation_ll(long long n, long p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

Complex cpow_p(long p, Complex e) { return std::exp(e * std::log(static_cast<double>(p))); }

double rpow_p(long p, double e) { return std::exp(e * std::log(static_cast<double>(p))); }

} // namespace

PAdicContext::PAdicContext(long p_, int M, int N) : p(p_), outer_depth(M), inner_depth(N) {
    if (!is_prime(p)) throw ConfigError("PAdicContext: p must be prime");
    if (M < 1 || N < 1) throw ConfigError("PAdicContext: depths must be >= 1");
}

PAdicContext PAdicContext::defaults(long p_) {
    return p_ <= 3 ? PAdicContext(p_, 5, 8) : PAdicContext(p_, 4, 6);
}

std::optional<long> valuation(const Rational& x, long p) {
    if (x == 0) return std::nullopt;
    return valuation_int(x.get_num(), p) - valuation_int(x.get_den(), p);
}

Rational norm_p(const Rational& x, long p) {
    auto v = valuation(x, p);
    if (!v) return Rational(0);
    return pow_rational(p, -*v);
}

Rational psi_p(const Rational& x, long p) {
    Rational n = norm_p(x, p);
    return n > 1 ? n : Rational(1);
}

Rational gamma_qp_exact(long s, long p) {
    if (s == 0) throw PoleEncountered("Gamma_{Q_p} pole at 0");
    const Rational num = Rational(1) - pow_rational(p, -1);
    const Rational den = Rational(1) - pow_rational(p, -s);
    return num / den;
}

Rational gamma_qp_infinity(long p) { return Rational(1) - pow_rational(p, -1); }

Complex gamma_qp(Complex s, long p) {
    const Complex den = 1.0 - cpow_p(p, -s);
    if (std::abs(den) < 1e-12) throw PoleEncountered("Gamma_{Q_p} pole");
    return (1.0 - 1.0 / static_cast<double>(p)) / den;
}

void check_f_convergence(Complex a, Complex c) {
    if (!(c.real() > -1.0))
        throw ConvergenceViolation("F(a,c;y) requires Re(c) > -1");
    if (!(a.real() + c.real() < -1.0))
        throw ConvergenceViolation("F(a,c;y) requires Re(a+c) < -1");
}

Complex f_closed(Complex a, Complex c, const Rational& y, long p) {
    check_f_convergence(a, c);
    const auto vy = valuation(y, p);
    const Complex gc1 = gamma_qp(c + 1.0, p);
    const Complex gac1 = gamma_qp(a + c + 1.0, p);
    if (!vy || *vy >= 0) return gc1 - gac1;

    const double n = static_cast<double>(*vy);
    const double pd = static_cast<double>(p);
    const Complex ginf = 1.0 - 1.0 / pd;
    // reciprocals of Gamma_{Q_p} are entire in the argument
    const Complex inv_g_na1 = (1.0 - cpow_p(p, -(n * (a + 1.0) + 1.0))) / ginf;
    const Complex den_a1 = 1.0 - cpow_p(p, -(a + 1.0));
    if (std::abs(den_a1) < 1e-12)
        throw PoleEncountered("F closed form: Gamma_{Q_p}(a+1) pole");
    const Complex ga1_over_gna1 = (1.0 - cpow_p(p, -n * (a + 1.0))) / den_a1;

    return cpow_p(p, -(n + 1.0) * (c + 1.0) - n * a) * gc1 -
           cpow_p(p, -n * (a + c + 1.0)) * gac1 +
           cpow_p(p, -n * c) * ginf * (inv_g_na1 - ga1_over_gna1);
}

Rational f_closed_exact(long a, long c, const Rational& y, long p) {
    check_f_convergence(Complex(static_cast<double>(a), 0.0),
                        Complex(static_cast<double>(c), 0.0));
    const auto vy = valuation(y, p);
    const Rational gc1 = gamma_qp_exact(c + 1, p);
    const Rational gac1 = gamma_qp_exact(a + c + 1, p);
    if (!vy || *vy >= 0) return gc1 - gac1;

    const long n = *vy;
    const Rational ginf = gamma_qp_infinity(p);
    const Rational inv_g_na1 = (Rational(1) - pow_rational(p, -(n * (a + 1) + 1))) / ginf;
    if (a == -1) throw PoleEncountered("F closed form: Gamma_{Q_p}(a+1) pole");
    const Rational ga1_over_gna1 =
        (Rational(1) - pow_rational(p, -n * (a + 1))) / (Rational(1) - pow_rational(p, -(a + 1)));

    return pow_rational(p, -(n + 1) * (c + 1) - n * a) * gc1 -
           pow_rational(p, -n * (a + c + 1)) * gac1 +
           pow_rational(p, -n * c) * ginf * (inv_g_na1 - ga1_over_gna1);
}

// ---------------------------------------------------------------------------
// Coset-enumeration oracle
// ---------------------------------------------------------------------------

namespace {

// Histogram of cells by (min(v_p(x0),0), v_p(x0-y)); counts are exact, so the
// cell sums can be re-weighted by any exponent pair afterwards.
struct CellHistogram {
    std::map<std::pair<long, long>, long long> counts;
    long p;
    int M, N;
};

CellHistogram enumerate_cells(const Rational& y, const PAdicContext& ctx) {
    const long p = ctx.p;
    const int M = ctx.outer_depth, N = ctx.inner_depth;

    const auto vy = valuation(y, p);
    if (vy && *vy < -M)
        throw DepthTooSmall("f_oracle: v_p(y) below -M, cell of y not enumerable");

    long long total = 1;
    for (int i = 0; i < M + N; ++i) {
        if (total > (1LL << 40))
            throw ConfigError("f_oracle: p^{M+N} too large to enumerate");
        total *= p;
    }

    // cell of y: k_y with k_y * p^{-M} == y (mod p^N Z_p)
    Int pMN(total);
    Int pM;
    mpz_ui_pow_ui(pM.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(M));
    Int num = y.get_num() * pM;
    Int den = y.get_den();
    if (den != 0) {
        // strip common p powers (den's p-part divides p^M when v_p(y) >= -M)
        Int pp(p);
        while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t()) != 0) {
            den /= p;
            if (mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t()) == 0)
                throw DepthTooSmall("f_oracle: y outside p^{-M} Z_p");
            num /= p;
        }
    }
    Int deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), pMN.get_mpz_t()) == 0)
        throw DepthTooSmall("f_oracle: denominator of y not invertible");
    Int ky_z = (num * deninv) % pMN;
    if (ky_z < 0) ky_z += pMN;
    const long long ky = ky_z.get_si();

    CellHistogram hist;
    hist.p = p;
    hist.M = M;
    hist.N = N;

    // fast path needs k*t - s*p^M within long long
    const bool fast = mpz_sizeinbase(y.get_num().get_mpz_t(), 2) <= 20 &&
                      mpz_sizeinbase(y.get_den().get_mpz_t(), 2) <= 20;

    if (fast) {
        const long long s = y.get_num().get_si();
        const long long t = y.get_den().get_si();
        long long c0 = s;
        for (int i = 0; i < M; ++i) c0 *= p;
        for (long long k = 0; k < total; ++k) {
            if (k == ky) continue;
            const long v1 = (k == 0) ? 0 : std::min(valuation_ll(k, p) - M, 0L);
            const long long diff = k * t - c0;
            // diff == 0 would mean x0 == y, which is the skipped cell
            const long v2 = valuation_ll(diff, p) - valuation_ll(t, p) - M;
            ++hist.counts[{v1, v2}];
        }
    } else {
        const Int s = y.get_num();
        const Int t = y.get_den();
        const Int c0 = s * pM;
        const long vt = (t == 1) ? 0 : valuation_int(t, p);
        for (long long k = 0; k < total; ++k) {
            if (k == ky) continue;
            const long v1 = (k == 0) ? 0 : std::min(valuation_ll(k, p) - M, 0L);
            Int diff = Int(k) * t - c0;
            const long v2 = valuation_int(diff, p) - vt - M;
            ++hist.counts[{v1, v2}];
        }
    }
    return hist;
}

double f_tail_bound(double ra, double rc, const Rational& y, const PAdicContext& ctx) {
    const long p = ctx.p;
    const double pd = static_cast<double>(p);
    // outer region |x|_p > p^M: |x - y|_p = |x|_p there
    const double rho = rpow_p(p, ra + rc + 1.0);
    const double outer = (1.0 - 1.0 / pd) * std::pow(rho, ctx.outer_depth + 1) / (1.0 - rho);
    // cell containing y: psi is constant there, the |x-y| part integrates
    const double psi_y = to_double(psi_p(y, p));
    const double cell = std::pow(psi_y, ra) * rpow_p(p, -ctx.inner_depth * (rc + 1.0)) *
                        (1.0 - 1.0 / pd) / (1.0 - rpow_p(p, -(rc + 1.0)));
    return outer + cell;
}

Rational f_tail_exact(long a, long c, const Rational& y, const PAdicContext& ctx) {
    const long p = ctx.p;
    const Rational one(1);
    const Rational ginf = gamma_qp_infinity(p);
    const Rational rho = pow_rational(p, a + c + 1);
    const Rational outer =
        ginf * pow_rational(p, (a + c + 1) * (ctx.outer_depth + 1)) / (one - rho);
    Rational psi_y = psi_p(y, p);
    Rational psi_pow(1);
    for (long i = 0; i < -a; ++i) psi_pow /= psi_y; // a < 0 in the convergence region
    const Rational cell = psi_pow * pow_rational(p, -ctx.inner_depth * (c + 1)) * ginf /
                          (one - pow_rational(p, -(c + 1)));
    return outer + cell;
}

} // namespace

OracleResult f_oracle(Complex a, Complex c, const Rational& y, const PAdicContext& ctx) {
    check_f_convergence(a, c);
    const CellHistogram hist = enumerate_cells(y, ctx);
    const Complex measure = cpow_p(ctx.p, Complex(-static_cast<double>(ctx.inner_depth), 0.0));
    Complex sum = 0.0;
    for (const auto& [key, count] : hist.counts) {
        const auto [v1, v2] = key;
        sum += static_cast<double>(count) *
               cpow_p(ctx.p, -(static_cast<double>(v1) * a + static_cast<double>(v2) * c));
    }
    sum *= measure;
    return {sum, f_tail_bound(a.real(), c.real(), y, ctx)};
}

OracleResultExact f_oracle_exact(long a, long c, const Rational& y, const PAdicContext& ctx) {
    check_f_convergence(Complex(static_cast<double>(a), 0.0),
                        Complex(static_cast<double>(c), 0.0));
    const CellHistogram hist = enumerate_cells(y, ctx);
    Rational sum(0);
    for (const auto& [key, count] : hist.counts) {
        const auto [v1, v2] = key;
        sum += Rational(Int(count)) * pow_rational(ctx.p, -(v1 * a + v2 * c));
    }
    sum *= pow_rational(ctx.p, -ctx.inner_depth);
    return {sum, f_tail_exact(a, c, y, ctx)};
}

// ---------------------------------------------------------------------------
// J(a,b,c)
// ---------------------------------------------------------------------------

void check_j_convergence(Complex a, Complex b, Complex c) {
    check_f_convergence(a, c);
    check_f_convergence(b, c);
    if (!(a.real() + b.real() + c.real() < -2.0))
        throw ConvergenceViolation("J(a,b,c) requires Re(a+b+c) < -2");
}

Complex j_closed(Complex a, Complex b, Complex c, long p) {
    check_j_convergence(a, b, c);
    return gamma_qp(c + 1.0, p) * gamma_qp(-a - c - 1.0, p) * gamma_qp(-b - c - 1.0, p) *
           gamma_qp(-a - b - c - 2.0, p) /
           (gamma_qp(-a, p) * gamma_qp(-b, p) * gamma_qp(-a - b - 2.0 * c - 2.0, p));
}

Rational j_closed_exact(long a, long b, long c, long p) {
    check_j_convergence(Complex(static_cast<double>(a), 0.0),
                        Complex(static_cast<double>(b), 0.0),
                        Complex(static_cast<double>(c), 0.0));
    return gamma_qp_exact(c + 1, p) * gamma_qp_exact(-a - c - 1, p) *
           gamma_qp_exact(-b - c - 1, p) * gamma_qp_exact(-a - b - c - 2, p) /
           (gamma_qp_exact(-a, p) * gamma_qp_exact(-b, p) *
            gamma_qp_exact(-a - b - 2 * c - 2, p));
}

OracleResult j_oracle(Complex a, Complex b, Complex c, const PAdicContext& ctx) {
    check_j_convergence(a, b, c);
    const long p = ctx.p;
    const double pd = static_cast<double>(p);
    const double ginf = 1.0 - 1.0 / pd;

    // v_p(y) >= 0 shells: psi(y)^b = 1 and F is one constant; total measure 1
    Complex sum = f_closed(a, c, Rational(0), p);
    for (int n = -1; n >= -ctx.outer_depth; --n) {
        const Rational yrep = pow_rational(p, n);
        const double measure = rpow_p(p, -n) * ginf;
        sum += measure * cpow_p(p, -static_cast<double>(n) * b) * f_closed(a, c, yrep, p);
    }

    // Geometric tail over shells n < -M, from
    //   F_n = p^{-n(a+c+1)} A + p^{-nc} Ginf B_n,
    //   |B_n| <= Kb0 + |r|^n Kb1  with  r = p^{-(a+1)}.
    const double ra = a.real(), rb = b.real(), rc = c.real();
    const Complex A =
        cpow_p(p, -(c + 1.0)) * gamma_qp(c + 1.0, p) - gamma_qp(a + c + 1.0, p);
    const double abs_r_denom = std::abs(1.0 - cpow_p(p, -(a + 1.0)));
    if (abs_r_denom < 1e-12) throw PoleEncountered("J tail bound: Gamma_{Q_p}(a+1) pole");
    const double kb0 = 1.0 / ginf + 1.0 / abs_r_denom;
    const double kb1 = (1.0 / pd) / ginf + 1.0 / abs_r_denom;
    auto geom = [&](double x) {
        // sum_{t >= M+1} p^{t x}, requires p^x < 1
        const double px = rpow_p(p, x);
        return std::pow(px, ctx.outer_depth + 1) / (1.0 - px);
    };
    const double tail = ginf * (std::abs(A) * geom(ra + rb + rc + 2.0) +
                                ginf * (kb0 * geom(rb + rc + 1.0) +
                                        kb1 * geom(ra + rb + rc + 2.0)));
    return {sum, tail};
}

OracleResultExact j_oracle_exact(long a, long b, long c, const PAdicContext& ctx) {
    check_j_convergence(Complex(static_cast<double>(a), 0.0),
                        Complex(static_cast<double>(b), 0.0),
                        Complex(static_cast<double>(c), 0.0));
    const long p = ctx.p;
    const Rational one(1);
    const Rational ginf = gamma_qp_infinity(p);

    Rational sum = f_closed_exact(a, c, Rational(0), p);
    for (long n = -1; n >= -ctx.outer_depth; --n) {
        const Rational measure = pow_rational(p, -n) * ginf;
        sum += measure * pow_rational(p, -n * b) * f_closed_exact(a, c, pow_rational(p, n), p);
    }

    // The exact remainder: with F_n = p^{-n(a+c+1)} A + p^{-nc} Ginf B_n and
    // B_n = (1 - r^n/p)/Ginf - (1 - r^n)/(1 - r), every piece is geometric in
    // n, so the tail sums in closed form. The integrand is positive here, so
    // this equals |J - sum| exactly.
    if (a == -1) throw PoleEncountered("J exact tail: Gamma_{Q_p}(a+1) pole");
    const Rational A =
        pow_rational(p, -(c + 1)) * gamma_qp_exact(c + 1, p) - gamma_qp_exact(a + c + 1, p);
    const Rational inv_one_minus_r = one / (one - pow_rational(p, -(a + 1)));
    auto geom = [&](long x) {
        // sum_{t >= M+1} (p^x)^t, x < 0
        const Rational px = pow_rational(p, x);
        Rational head = pow_rational(p, x * (ctx.outer_depth + 1));
        return head / (one - px);
    };
    // sum_{n <= -M-1} p^{-n(b+1)} ginf F_n, split by the three exponents
    const Rational tail =
        ginf * (A * geom(a + b + c + 2) +
                ginf * ((one / ginf - inv_one_minus_r) * geom(b + c + 1) +
                        (inv_one_minus_r - one / ginf / p) * geom(a + b + c + 2)));
    return {sum, tail};
}

TripleResult triple_closed(Complex s1, Complex s2, Complex s3, long p) {
    const Complex nu1 = s1 - s2 - s3;
    const Complex nu2 = s2 - s3 - s1;
    const Complex nu3 = s3 - s1 - s2;
    const Complex ratio = gamma_qp(s1 + s2 + s3 - 1.0, p) * gamma_qp(-nu1, p) *
                          gamma_qp(-nu2, p) * gamma_qp(-nu3, p) /
                          (gamma_qp(2.0 * s1, p) * gamma_qp(2.0 * s2, p) *
                           gamma_qp(2.0 * s3, p));
    const Complex via_j = j_closed(-2.0 * s1, -2.0 * s2, -1.0 - nu3, p);
    if (std::abs(ratio - via_j) > 1e-10 * (1.0 + std::abs(ratio)))
        throw RouteMismatch("triple_closed: (1.9.2) ratio disagrees with J dictionary");
    const double pd = static_cast<double>(p);
    return {ratio, (1.0 + 1.0 / pd) * ratio};
}

Rational moebius_act(const Mat2& g, const Rational& z) {
    const Rational den = g.c * z + g.d;
    if (den == 0) throw DivisionByZero("Moebius action: cz + d = 0");
    return (g.a * z + g.b) / den;
}

Mat2 k_matrix(const Rational& y, long p) {
    const auto vy = valuation(y, p);
    if (!vy || *vy >= 0) {
        // y in Z_p
        return Mat2{Rational(1), -y, Rational(0), Rational(1)};
    }
    return Mat2{Rational(1) / y, Rational(-1), Rational(1), Rational(0)};
}

} // namespace tripleint
