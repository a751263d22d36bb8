#pragma once

#include <complex>

namespace elastdort {

using cd = std::complex<double>;

// Cylinder function evaluation: value together with the first two derivatives
// in the argument. First derivatives come from the recurrence
// C'_n = (C_{n-1} - C_{n+1})/2, second derivatives from the Bessel ODE
// z^2 C'' + z C' + (z^2 - n^2) C = 0.
struct BesselEval {
    int order = 0;
    double argument = 0.0;
    cd value{};
    cd first_derivative{};
    cd second_derivative{};
};

// J_n(z) for integer n (negative orders via J_{-n} = (-1)^n J_n), z >= 0.
BesselEval bessel_j(int n, double z);

// H_n^{(1)}(z) = J_n(z) + i Y_n(z), z > 0.
BesselEval hankel1(int n, double z);

// Two-term small-argument truncations:
//   J_n(z)       ~ (z^n - z^{n+2}/(4n+4)) / (2^n Gamma(n+1))
//   H_n^{(1)}(z) ~ -i 2^n Gamma(n) / pi * (z^{-n} + z^{-(n-2)}/(4n-4))
// The H form needs n >= 2 (Gamma(n) pole at n=0, zero divisor at n=1).
enum class SeriesKind { J, H1 };
cd small_z_series(int n, double z, SeriesKind kind);

} // namespace elastdort
