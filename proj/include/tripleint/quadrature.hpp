#ifndef TRIPLEINT_QUADRATURE_HPP
#define TRIPLEINT_QUADRATURE_HPP

#include <array>
#include <complex>
#include <vector>

#include "tripleint/qseries.hpp"

namespace tripleint {

struct QuadratureConfig {
    std::size_t initial_grid = 32;  // points per dimension at the first level
    std::size_t max_refinements = 8; // grid doublings before giving up
    double tolerance = 1e-9;        // relative change between levels

    void validate() const;
};

/// Best estimate plus convergence state. A failed refinement is reported,
/// never thrown: `converged=false` with the last estimate and the last
/// inter-level delta as the error proxy.
struct QuadResult {
    double value = 0.0;
    bool converged = false;
    double error_estimate = 0.0;
};

struct QuadResultC {
    Complex value;
    bool converged = false;
    double error_estimate = 0.0;
};

/// J(a1,a2,a3) of Eq (1.2.2): the (2pi)^-3-normalized torus integral of
/// prod |sin(theta_i - theta_{i+1})|^{2a_{i+2}}, reduced to two dimensions
/// by translation invariance and evaluated with a midpoint product rule.
QuadResult real_triple_lhs(const std::array<double, 3>& a, const QuadratureConfig& cfg);

/// The Gamma ratio of Eq (1.2.2), evaluated in both printed forms (the
/// second using the duplication-formula rearrangement); throws RouteMismatch
/// if they disagree beyond 1e-12 relative.
Complex real_triple_rhs(const std::array<Complex, 3>& a);

/// The q-torus integral of Thm 1.6 (LHS of (1.6.1)), reduced to two
/// dimensions (y3 = 1) and evaluated with the periodic trapezoid rule;
/// Pochhammer factors are precomputed on the shared angle grid.
QuadResultC qtorus_lhs(const std::array<Complex, 3>& a, const QContext& qctx,
                       const QuadratureConfig& cfg);

/// Gamma_q ratio of Eq (1.6.1).
Complex qtorus_rhs(const std::array<Complex, 3>& a, const QContext& qctx);

/// I_{C;2}(a) of §5.2 via the §5.3 radial reduction: Gauss-Legendre in the
/// compactified radial variables v_i = r_i^2/(1+r_i^2), midpoint trapezoid in
/// the relative angle. Includes the pi^2 factor.
QuadResult complex_pair_lhs(const std::array<double, 3>& a, const QuadratureConfig& cfg);

/// pi^2 times the Gamma ratio of Eq (5.3.1).
Complex complex_pair_rhs(const std::array<Complex, 3>& a);

/// The §6 rational form: 8 * the 3-dimensional integral over R^3 of the
/// (1+x^2)-kernel product, mapped through x = tan(alpha) and evaluated with
/// a midpoint rule; equals (2pi)^3 J(a1,a2,a3).
QuadResult rational_form_real(const std::array<double, 3>& a, const QuadratureConfig& cfg);

/// Gauss-Legendre nodes and weights on [0,1].
void gauss_legendre_01(std::size_t n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace tripleint

#endif
