#ifndef TRIPLEINT_GAMMA_HPP
#define TRIPLEINT_GAMMA_HPP

#include <complex>

namespace tripleint {

/// Gamma function for complex arguments (Lanczos approximation with
/// reflection for Re z < 1/2). Relative error well below 1e-12 on the
/// working range; throws PoleEncountered at nonpositive integers.
std::complex<double> gamma_complex(std::complex<double> z);

} // namespace tripleint

#endif
