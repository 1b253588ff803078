#include "decolab/rng.hpp"

#include <cmath>
#include <numbers>

namespace decolab {

double CounterRng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 == 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::complex<double> CounterRng::complex_normal() {
    return {normal() * std::numbers::sqrt2 / 2.0, normal() * std::numbers::sqrt2 / 2.0};
}

}  // namespace decolab
