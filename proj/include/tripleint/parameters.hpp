#ifndef TRIPLEINT_PARAMETERS_HPP
#define TRIPLEINT_PARAMETERS_HPP

#include <array>
#include <complex>

namespace tripleint {

/// The parameter dictionary tying the four integral families together:
///   nu_i   = sigma_i - sigma_j - sigma_k   (cyclic)
///   real-case    a_i = (nu_i - 1)/4
///   complex-case a_i = -1 - nu_i
/// All maps are linear, so round trips are exact up to rounding.
struct ParameterSet {
    using C = std::complex<double>;

    std::array<C, 3> sigma;
    std::array<C, 3> nu;
    std::array<C, 3> a_real;
    std::array<C, 3> a_complex;

    static ParameterSet from_sigma(const std::array<C, 3>& sigma);
    static ParameterSet from_nu(const std::array<C, 3>& nu);
    static ParameterSet from_real_a(const std::array<C, 3>& a);
    static ParameterSet from_complex_a(const std::array<C, 3>& a);
};

} // namespace tripleint

#endif
