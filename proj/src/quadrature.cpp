#include "tripleint/quadrature.hpp"

#include <cmath>

#include "tripleint/errors.hpp"
#include "tripleint/gamma.hpp"

namespace tripleint {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

bool close_rel(double delta, double scale, double tol) {
    return std::abs(delta) <= tol * std::max(scale, 1e-300);
}

} // namespace

void QuadratureConfig::validate() const {
    if (initial_grid < 8) throw ConfigError("QuadratureConfig: grid must be >= 8");
    if (!(tolerance > 0.0)) throw ConfigError("QuadratureConfig: tolerance must be > 0");
}

// ---------------------------------------------------------------------------
// Real torus integral
// ---------------------------------------------------------------------------

namespace {

double real_triple_level(const std::array<double, 3>& a, std::size_t m) {
    const double h = kTwoPi / static_cast<double>(m);
    // J = (2pi)^-2 int int |sin u|^{2a3} |sin v|^{2a1} |sin(u+v)|^{2a2}
    // u, v on midpoint grids, so u+v lands on the plain grid.
    std::vector<double> su(m), sv(m), sw(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double mid = (static_cast<double>(j) + 0.5) * h;
        su[j] = std::pow(std::abs(std::sin(mid)), 2.0 * a[2]);
        sv[j] = std::pow(std::abs(std::sin(mid)), 2.0 * a[0]);
        sw[j] = std::pow(std::abs(std::sin(static_cast<double>(j) * h)), 2.0 * a[1]);
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        double row = 0.0;
        for (std::size_t k = 0; k < m; ++k) row += sv[k] * sw[(j + k + 1) % m];
        sum += su[j] * row;
    }
    return sum / (static_cast<double>(m) * static_cast<double>(m));
}

} // namespace

QuadResult real_triple_lhs(const std::array<double, 3>& a, const QuadratureConfig& cfg) {
    cfg.validate();
    QuadResult res;
    double prev = real_triple_level(a, cfg.initial_grid);
    std::size_t m = cfg.initial_grid;
    for (std::size_t level = 0; level < cfg.max_refinements; ++level) {
        m *= 2;
        const double cur = real_triple_level(a, m);
        res.value = cur;
        res.error_estimate = std::abs(cur - prev);
        if (close_rel(cur - prev, std::abs(cur), cfg.tolerance)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

Complex real_triple_rhs(const std::array<Complex, 3>& a) {
    const Complex total = a[0] + a[1] + a[2];
    const Complex half(0.5, 0.0);
    Complex pair = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) pair *= gamma_complex(a[i] + a[j] + 1.0);

    const Complex form1 = gamma_complex(a[0] + half) * gamma_complex(a[1] + half) *
                          gamma_complex(a[2] + half) * gamma_complex(total + 1.0) /
                          (std::pow(gamma_complex(half), 3) * pair);

    Complex prod2 = gamma_complex(total + 1.0);
    for (int i = 0; i < 3; ++i) prod2 *= gamma_complex(2.0 * a[i] + 1.0);
    Complex den2 = std::exp(total * std::log(4.0)) * pair;
    for (int i = 0; i < 3; ++i) den2 *= gamma_complex(a[i] + 1.0);
    const Complex form2 = prod2 / den2;

    if (std::abs(form1 - form2) > 1e-12 * (std::abs(form1) + 1e-300))
        throw RouteMismatch("real_triple_rhs: duplication-formula forms disagree");
    return form1;
}

// ---------------------------------------------------------------------------
// q-torus integral
// ---------------------------------------------------------------------------

namespace {

Complex qtorus_level(const std::array<Complex, 3>& a, const QContext& qctx, std::size_t m) {
    // tables of (x;q)_{a}(q/x;q)_{a} over the angle grid, one per exponent
    std::array<std::vector<Complex>, 3> table;
    for (int t = 0; t < 3; ++t) table[t].resize(m);
    for (std::size_t l = 0; l < m; ++l) {
        const double ang = kTwoPi * static_cast<double>(l) / static_cast<double>(m);
        const Complex x(std::cos(ang), std::sin(ang));
        const Complex xinv = std::conj(x);
        for (int t = 0; t < 3; ++t) {
            table[t][l] =
                pochhammer_numeric(x, a[t], qctx) *
                pochhammer_numeric(qctx.q * xinv, a[t], qctx);
        }
    }
    // y3 = 1; pairs (1,2) -> a3 at angle j-k, (1,3) -> a2 at angle j,
    // (2,3) -> a1 at angle k
    Complex sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        Complex row = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            row += table[0][k] * table[2][(j + m - k) % m];
        sum += table[1][j] * row;
    }
    return sum / (static_cast<double>(m) * static_cast<double>(m));
}

} // namespace

QuadResultC qtorus_lhs(const std::array<Complex, 3>& a, const QContext& qctx,
                       const QuadratureConfig& cfg) {
    cfg.validate();
    for (const auto& ai : a)
        if (!(ai.real() > 0.0))
            throw ConvergenceViolation("qtorus_lhs requires Re(a_i) > 0");
    QuadResultC res;
    Complex prev = qtorus_level(a, qctx, cfg.initial_grid);
    std::size_t m = cfg.initial_grid;
    for (std::size_t level = 0; level < cfg.max_refinements; ++level) {
        m *= 2;
        const Complex cur = qtorus_level(a, qctx, m);
        res.value = cur;
        res.error_estimate = std::abs(cur - prev);
        if (close_rel(std::abs(cur - prev), std::abs(cur), cfg.tolerance)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

Complex qtorus_rhs(const std::array<Complex, 3>& a, const QContext& qctx) {
    const Complex total = a[0] + a[1] + a[2];
    Complex num = q_gamma(total + 1.0, qctx);
    for (int i = 0; i < 3; ++i) num *= q_gamma(2.0 * a[i] + 1.0, qctx);
    Complex den = 1.0;
    for (int i = 0; i < 3; ++i) den *= q_gamma(a[i] + 1.0, qctx);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) den *= q_gamma(a[i] + a[j] + 1.0, qctx);
    return num / den;
}

// ---------------------------------------------------------------------------
// Complex-plane pair integral, radial reduction of §5.3
// ---------------------------------------------------------------------------

namespace {

double complex_pair_level(const std::array<double, 3>& a, std::size_t n_radial,
                          std::size_t m_angle) {
    std::vector<double> nodes, weights;
    gauss_legendre_01(n_radial, nodes, weights);

    std::vector<double> u(n_radial), su(n_radial), w1(n_radial), w2(n_radial);
    for (std::size_t i = 0; i < n_radial; ++i) {
        const double v = nodes[i];
        u[i] = v / (1.0 - v);
        su[i] = std::sqrt(u[i]);
        // (1+u)^{-2-a2-a3} du = (1-v)^{a2+a3} dv  (and symmetrically)
        w1[i] = weights[i] * std::pow(1.0 - v, a[1] + a[2]);
        w2[i] = weights[i] * std::pow(1.0 - v, a[0] + a[2]);
    }
    std::vector<double> cosd(m_angle);
    for (std::size_t l = 0; l < m_angle; ++l)
        cosd[l] = std::cos((static_cast<double>(l) + 0.5) * kTwoPi / static_cast<double>(m_angle));

    double sum = 0.0;
    for (std::size_t i = 0; i < n_radial; ++i) {
        for (std::size_t j = 0; j < n_radial; ++j) {
            const double base = u[i] + u[j];
            const double cross = 2.0 * su[i] * su[j];
            double ang = 0.0;
            for (std::size_t l = 0; l < m_angle; ++l)
                ang += std::pow(base - cross * cosd[l], a[2]);
            ang *= kTwoPi / static_cast<double>(m_angle);
            sum += w1[i] * w2[j] * ang;
        }
    }
    // I = (2pi/4) * sum over the v-square
    return 0.5 * kPi * sum;
}

} // namespace

QuadResult complex_pair_lhs(const std::array<double, 3>& a, const QuadratureConfig& cfg) {
    cfg.validate();
    if (a[2] < 0.0)
        throw ConvergenceViolation("complex_pair_lhs requires a3 >= 0 on the numeric path");
    QuadResult res;
    std::size_t n = cfg.initial_grid, m = 8 * cfg.initial_grid;
    double prev = complex_pair_level(a, n, m);
    for (std::size_t level = 0; level < cfg.max_refinements; ++level) {
        n *= 2;
        m *= 2;
        const double cur = complex_pair_level(a, n, m);
        res.value = cur;
        res.error_estimate = std::abs(cur - prev);
        if (close_rel(cur - prev, std::abs(cur), cfg.tolerance)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

Complex complex_pair_rhs(const std::array<Complex, 3>& a) {
    const Complex total = a[0] + a[1] + a[2];
    Complex num = gamma_complex(total + 2.0);
    for (int i = 0; i < 3; ++i) num *= gamma_complex(a[i] + 1.0);
    Complex den = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) den *= gamma_complex(a[i] + a[j] + 2.0);
    return kPi * kPi * num / den;
}

// ---------------------------------------------------------------------------
// §6 rational form over R^3
// ---------------------------------------------------------------------------

namespace {

double rational_form_level(const std::array<double, 3>& a, std::size_t m) {
    const double h = kPi / static_cast<double>(m);
    std::vector<double> x(m), k1(m), k2(m), k3(m), jac(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double alpha = -0.5 * kPi + (static_cast<double>(i) + 0.5) * h;
        x[i] = std::tan(alpha);
        const double sec2 = 1.0 + x[i] * x[i];
        jac[i] = sec2;
        k1[i] = std::pow(sec2, -(a[1] + a[2] + 1.0)) * jac[i];
        k2[i] = std::pow(sec2, -(a[0] + a[2] + 1.0)) * jac[i];
        k3[i] = std::pow(sec2, -(a[0] + a[1] + 1.0)) * jac[i];
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double dxy = std::pow(std::abs(x[i] - x[j]), 2.0 * a[2]);
            if (dxy == 0.0) continue;
            double inner = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                inner += k3[k] * std::pow(std::abs(x[i] - x[k]), 2.0 * a[1]) *
                         std::pow(std::abs(x[j] - x[k]), 2.0 * a[0]);
            }
            sum += k1[i] * k2[j] * dxy * inner;
        }
    }
    return 8.0 * sum * h * h * h;
}

} // namespace

QuadResult rational_form_real(const std::array<double, 3>& a, const QuadratureConfig& cfg) {
    cfg.validate();
    QuadResult res;
    std::size_t m = cfg.initial_grid;
    double prev = rational_form_level(a, m);
    for (std::size_t level = 0; level < cfg.max_refinements; ++level) {
        m *= 2;
        const double cur = rational_form_level(a, m);
        res.value = cur;
        res.error_estimate = std::abs(cur - prev);
        if (close_rel(cur - prev, std::abs(cur), cfg.tolerance)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre
// ---------------------------------------------------------------------------

void gauss_legendre_01(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev initial guess, Newton on P_n
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                   (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            pp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        // map [-1,1] -> [0,1]
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
}

} // namespace tripleint
