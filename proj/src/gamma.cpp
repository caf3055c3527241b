#include "tripleint/gamma.hpp"

#include <cmath>

#include "tripleint/errors.hpp"

namespace tripleint {

namespace {

// Lanczos g = 607/128, n = 15 (Boost/Godfrey coefficients); accurate to
// ~1e-15 relative over the right half-plane in double precision.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

} // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
    if (is_nonpositive_integer(z)) throw PoleEncountered("Gamma pole at nonpositive integer");
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> sum = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (z + static_cast<double>(k));
    const std::complex<double> t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

} // namespace tripleint
