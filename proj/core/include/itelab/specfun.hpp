#pragma once

#include <complex>
#include <vector>

#include "itelab/util.hpp"

namespace itelab::specfun {

inline constexpr int kDefaultOrderMax = 200;

// Spherical Bessel pair j_l(z), y_l(z) at integer order l >= 0 and complex
// argument z. Closed forms at l = 0, 1; upward recurrence for y_l; downward
// (Miller) recurrence for j_l once l outgrows |z|.
struct BesselPair {
    int order = 0;
    Complex argument{};
    Complex j_value{};
    Complex y_value{};
};

BesselPair sph_bessel(int l, Complex z, int order_max = kDefaultOrderMax);

// j_l and y_l for a whole order range 0..l_max in one sweep (shared
// recurrences); index i holds order i.
struct BesselTable {
    std::vector<Complex> j;
    std::vector<Complex> y;
};
BesselTable sph_bessel_table(int l_max, Complex z,
                             int order_max = kDefaultOrderMax);

// j_l for any integer order, negative included, via the downward-run
// three-term recurrence. Supports the reflection y_n = (-1)^{n+1} j_{-n-1}.
Complex sph_j_any(int l, Complex z, int order_max = kDefaultOrderMax);

// d/dz derivatives from the recurrences.
Complex sph_j_prime(int l, Complex z);
Complex sph_y_prime(int l, Complex z);

// Left side of the cross-product identity
//   j_{n+1}(z) y_{n-1}(z) - j_{n-1}(z) y_{n+1}(z) = (2n+1) z^{-3}
// minus the right side.
Complex wronskian_check(int n, Complex z);

// Regular solution u_l(xi;k) of u'' + (k^2 - l(l+1)/xi^2) u = 0, normalized
// so k^{l+1} u_l(xi;k) = k xi j_l(k xi); returns (u, du/dxi).
struct RiccatiValue {
    Complex value{};
    Complex derivative{};
};
RiccatiValue riccati_u(int l, double xi, Complex k);

// Riccati-Bessel cross kernels built from phi1 = -z y_l(z), phi2 = z j_l(z):
//   Phi(z,w) = phi1(z) phi2(w) - phi1(w) phi2(z)      (Phi(w,w) = 0)
//   Psi(z,w) = phi1(z) phi2'(w) - phi1'(w) phi2(z)    (Psi(w,w) = 1)
// The sign of the Neumann part is fixed by the diagonal normalization
// Psi(w,w) = +1.
struct PhiPsi {
    Complex Phi{};
    Complex Psi{};
};
PhiPsi phi_psi_kernels(Complex z, Complex w, int l);

// Legendre polynomial P_l(t) on [-1,1] by the three-term recurrence.
double legendre(int l, double t);
// (P_l(t), P_l'(t)) pair.
struct LegendrePair {
    double value = 0.0;
    double derivative = 0.0;
};
LegendrePair legendre_pair(int l, double t);

// Cylinder Bessel J_m(x) at integer order, real argument (Miller's
// algorithm). Used for the half-integer spherical orders j_{m-1/2} via
// sqrt(pi x / 2) J_m(x).
double cyl_bessel_j_int(int m, double x);

// Riccati-Bessel value z j_l(z) for integer or half-integer l >= 0 and real
// z > 0; half-integer orders reduce to integer-order cylinder functions.
double riccati_jl_real(double l, double z);

// (2l+1)!! as double.
double double_factorial_odd(int l);

}  // namespace itelab::specfun
