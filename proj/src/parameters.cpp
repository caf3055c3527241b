#include "tripleint/parameters.hpp"

namespace tripleint {

using C = std::complex<double>;

namespace {

ParameterSet fill_from_nu(const std::array<C, 3>& nu) {
    ParameterSet ps;
    ps.nu = nu;
    // sigma_i = -(nu_j + nu_k)/2
    ps.sigma = {-(nu[1] + nu[2]) / 2.0, -(nu[2] + nu[0]) / 2.0, -(nu[0] + nu[1]) / 2.0};
    for (int i = 0; i < 3; ++i) {
        ps.a_real[i] = (nu[i] - 1.0) / 4.0;
        ps.a_complex[i] = -1.0 - nu[i];
    }
    return ps;
}

} // namespace

ParameterSet ParameterSet::from_sigma(const std::array<C, 3>& sigma) {
    std::array<C, 3> nu = {sigma[0] - sigma[1] - sigma[2], sigma[1] - sigma[2] - sigma[0],
                           sigma[2] - sigma[0] - sigma[1]};
    ParameterSet ps = fill_from_nu(nu);
    ps.sigma = sigma;
    return ps;
}

ParameterSet ParameterSet::from_nu(const std::array<C, 3>& nu) { return fill_from_nu(nu); }

ParameterSet ParameterSet::from_real_a(const std::array<C, 3>& a) {
    std::array<C, 3> nu = {4.0 * a[0] + 1.0, 4.0 * a[1] + 1.0, 4.0 * a[2] + 1.0};
    ParameterSet ps = fill_from_nu(nu);
    ps.a_real = a;
    return ps;
}

ParameterSet ParameterSet::from_complex_a(const std::array<C, 3>& a) {
    std::array<C, 3> nu = {-1.0 - a[0], -1.0 - a[1], -1.0 - a[2]};
    ParameterSet ps = fill_from_nu(nu);
    ps.a_complex = a;
    return ps;
}

} // namespace tripleint
