#include "itelab/specfun.hpp"

#include <cmath>
#include <limits>

#include "itelab/errors.hpp"

namespace itelab::specfun {

namespace {

constexpr double kTinySeries = 1e-2;  // |z| below which closed forms cancel

// Power-series evaluation of j_l(z) = z^l/(2l+1)!! * S(z),
// S(z) = sum_m (-z^2/2)^m / (m! (2l+3)(2l+5)...(2l+2m+1)).
Complex sph_j_series(int l, Complex z) {
    const Complex z2 = -0.5 * z * z;
    Complex term = 1.0, sum = 1.0;
    for (int m = 1; m <= 40; ++m) {
        term *= z2 / (static_cast<double>(m) * (2.0 * l + 2.0 * m + 1.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    Complex zl = 1.0;
    for (int i = 0; i < l; ++i) zl *= z;
    return zl / double_factorial_odd(l) * sum;
}

Complex sph_j0(Complex z) {
    if (std::abs(z) < kTinySeries) return sph_j_series(0, z);
    return std::sin(z) / z;
}

Complex sph_j1(Complex z) {
    if (std::abs(z) < kTinySeries) return sph_j_series(1, z);
    return std::sin(z) / (z * z) - std::cos(z) / z;
}

Complex sph_y0(Complex z) { return -std::cos(z) / z; }

Complex sph_y1(Complex z) { return -std::cos(z) / (z * z) - std::sin(z) / z; }

// Upward three-term recurrence f_{l+1} = (2l+1)/z f_l - f_{l-1} from (f0,f1).
void recur_up(Complex z, Complex f0, Complex f1, int l_max,
              std::vector<Complex>& out) {
    out.resize(l_max + 1);
    out[0] = f0;
    if (l_max >= 1) out[1] = f1;
    for (int l = 1; l < l_max; ++l)
        out[l + 1] = (2.0 * l + 1.0) / z * out[l] - out[l - 1];
}

// Miller downward recurrence for j_0..j_lmax, normalized against the closed
// form at order 0 (or 1 when j_0 sits near a zero).
void miller_down(Complex z, int l_max, std::vector<Complex>& out) {
    const int start = l_max + std::max(20, static_cast<int>(std::ceil(std::abs(z))));
    Complex fp = 0.0;  // f_{l+1}
    Complex fc = 1e-280;
    out.assign(l_max + 1, Complex(0.0));
    for (int l = start; l >= 1; --l) {
        const Complex fm = (2.0 * l + 1.0) / z * fc - fp;
        fp = fc;
        fc = fm;
        if (l - 1 <= l_max) out[l - 1] = fc;
        if (std::abs(fc) > 1e280) {
            const double s = 1e-280;
            fc *= s;
            fp *= s;
            for (int i = l - 1; i <= l_max; ++i) out[i] *= s;
        }
    }
    const Complex j0 = sph_j0(z), j1 = sph_j1(z);
    Complex scale;
    if (std::abs(j0) >= std::abs(j1) * std::abs(out[0] == 0.0 ? 1.0 : 1.0) &&
        std::abs(out[0]) > 0.0 && std::abs(j0) > 1e-3) {
        scale = j0 / out[0];
    } else if (l_max >= 1 && std::abs(out[1]) > 0.0) {
        scale = j1 / out[1];
    } else {
        scale = j0 / out[0];
    }
    for (auto& v : out) {
        v *= scale;
        if (std::abs(v) < 1e-300) v = Complex(0.0, 0.0) * v;  // signed underflow
    }
}

}  // namespace

double double_factorial_odd(int l) {
    double v = 1.0;
    for (int i = 3; i <= 2 * l + 1; i += 2) v *= i;
    return v;
}

BesselTable sph_bessel_table(int l_max, Complex z, int order_max) {
    if (l_max < 0) throw InvalidParams("sph_bessel: order must be >= 0");
    if (l_max > order_max)
        throw OrderOverflow("sph_bessel: l = " + std::to_string(l_max) +
                            " exceeds order_max = " + std::to_string(order_max));
    BesselTable t;
    if (z == Complex(0.0)) {
        t.j.assign(l_max + 1, Complex(0.0));
        t.j[0] = 1.0;
        t.y.assign(l_max + 1,
                   Complex(-std::numeric_limits<double>::infinity(), 0.0));
        return t;
    }
    // y_l is the upward-dominant solution; always safe upward.
    recur_up(z, sph_y0(z), l_max >= 1 ? sph_y1(z) : Complex(0.0), l_max, t.y);
    // j_l upward only while the order stays below the argument.
    if (static_cast<double>(l_max) + 1.0 < std::abs(z)) {
        recur_up(z, sph_j0(z), l_max >= 1 ? sph_j1(z) : Complex(0.0), l_max, t.j);
    } else {
        miller_down(z, l_max, t.j);
    }
    return t;
}

BesselPair sph_bessel(int l, Complex z, int order_max) {
    const BesselTable t = sph_bessel_table(l, z, order_max);
    return BesselPair{l, z, t.j[l], t.y[l]};
}

Complex sph_j_any(int l, Complex z, int order_max) {
    if (l >= 0) return sph_bessel(l, z, order_max).j_value;
    if (-l > order_max + 1)
        throw OrderOverflow("sph_j_any: |l| exceeds order_max");
    // Run f_{l-1} = (2l+1)/z f_l - f_{l+1} downward from (j1, j0).
    Complex fp = sph_j1(z), fc = sph_j0(z);
    int cur = 0;
    while (cur > l) {
        const Complex fm = (2.0 * cur + 1.0) / z * fc - fp;
        fp = fc;
        fc = fm;
        --cur;
    }
    return fc;
}

Complex sph_j_prime(int l, Complex z) {
    if (l == 0) return -sph_j1(z);
    const BesselTable t = sph_bessel_table(l, z);
    return t.j[l - 1] - (l + 1.0) / z * t.j[l];
}

Complex sph_y_prime(int l, Complex z) {
    if (l == 0) return -sph_y1(z);
    const BesselTable t = sph_bessel_table(l, z);
    return t.y[l - 1] - (l + 1.0) / z * t.y[l];
}

Complex wronskian_check(int n, Complex z) {
    if (n < 1) throw InvalidParams("wronskian_check: n >= 1 required");
    const BesselTable t = sph_bessel_table(n + 1, z);
    const Complex lhs = t.j[n + 1] * t.y[n - 1] - t.j[n - 1] * t.y[n + 1];
    const Complex rhs = (2.0 * n + 1.0) / (z * z * z);
    return lhs - rhs;
}

RiccatiValue riccati_u(int l, double xi, Complex k) {
    if (xi <= 0.0) throw InvalidParams("riccati_u: xi > 0 required");
    if (k == Complex(0.0)) throw InvalidK("riccati_u: k = 0");
    const Complex z = k * xi;
    Complex kpow = 1.0;  // k^{l+1}
    for (int i = 0; i <= l; ++i) kpow *= k;
    const BesselTable t = sph_bessel_table(std::max(l, 1), z);
    const Complex phi2 = z * t.j[l];
    // phi2'(z) = z j_{l-1}(z) - l j_l(z); at l = 0, j_{-1}(z) = cos(z)/z.
    const Complex jm1 = l >= 1 ? t.j[l - 1] : std::cos(z) / z;
    const Complex dphi2 = z * jm1 - static_cast<double>(l) * t.j[l];
    return RiccatiValue{phi2 / kpow, k * dphi2 / kpow};
}

PhiPsi phi_psi_kernels(Complex z, Complex w, int l) {
    if (z == Complex(0.0) || w == Complex(0.0))
        throw InvalidParams("phi_psi_kernels: nonzero arguments required");
    const BesselTable tz = sph_bessel_table(std::max(l, 1), z);
    const BesselTable tw = sph_bessel_table(std::max(l, 1), w);
    const Complex jm1w = l >= 1 ? tw.j[l - 1] : std::cos(w) / w;
    const Complex ym1w = l >= 1 ? tw.y[l - 1] : std::sin(w) / w;

    const Complex phi1_z = -z * tz.y[l];
    const Complex phi2_z = z * tz.j[l];
    const Complex phi1_w = -w * tw.y[l];
    const Complex phi2_w = w * tw.j[l];
    const Complex dphi2_w = w * jm1w - static_cast<double>(l) * tw.j[l];
    const Complex dphi1_w = -(w * ym1w - static_cast<double>(l) * tw.y[l]);

    PhiPsi r;
    r.Phi = phi1_z * phi2_w - phi1_w * phi2_z;
    r.Psi = phi1_z * dphi2_w - dphi1_w * phi2_z;
    return r;
}

double legendre(int l, double t) { return legendre_pair(l, t).value; }

LegendrePair legendre_pair(int l, double t) {
    if (std::abs(t) > 1.0 + 1e-14)
        throw InvalidParams("legendre: |t| <= 1 required");
    if (l == 0) return {1.0, 0.0};
    double pm2 = 1.0, pm1 = t;
    for (int n = 1; n < l; ++n) {
        const double p = ((2.0 * n + 1.0) * t * pm1 - n * pm2) / (n + 1.0);
        pm2 = pm1;
        pm1 = p;
    }
    double dp;
    if (std::abs(t) < 1.0 - 1e-12) {
        dp = l * (t * pm1 - pm2) / (t * t - 1.0);
    } else {
        dp = 0.5 * l * (l + 1.0) * (t > 0 ? 1.0 : (l % 2 ? 1.0 : -1.0));
    }
    return {pm1, dp};
}

double cyl_bessel_j_int(int m, double x) {
    if (m < 0) throw InvalidParams("cyl_bessel_j_int: m >= 0 required");
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    const double ax = std::abs(x);
    if (static_cast<double>(m) < ax - 2.0) {
        // Upward from closed forms.
        double fm2 = std::cyl_bessel_j(0.0, ax), fm1 = std::cyl_bessel_j(1.0, ax);
        if (m == 0) return fm2;
        for (int n = 1; n < m; ++n) {
            const double f = 2.0 * n / ax * fm1 - fm2;
            fm2 = fm1;
            fm1 = f;
        }
        double v = fm1;
        return (x < 0 && m % 2) ? -v : v;
    }
    // Miller downward with the normalization J_0 + 2 J_2 + 2 J_4 + ... = 1.
    const int start = m + std::max(22, static_cast<int>(std::ceil(ax))) +
                      static_cast<int>(std::sqrt(40.0 * m));
    double fp = 0.0, fc = 1e-280, norm = 0.0, target = 0.0;
    for (int n = start; n >= 0; --n) {
        const double fm = 2.0 * (n + 1.0) / ax * fc - fp;
        fp = fc;
        fc = fm;
        if (n == m) target = fc;
        if (n % 2 == 0) norm += (n == 0 ? 1.0 : 2.0) * fc;
        if (std::abs(fc) > 1e280) {
            fc *= 1e-280;
            fp *= 1e-280;
            norm *= 1e-280;
            target *= 1e-280;
        }
    }
    double v = target / norm;
    return (x < 0 && m % 2) ? -v : v;
}

double riccati_jl_real(double l, double z) {
    if (z <= 0.0) throw InvalidParams("riccati_jl_real: z > 0 required");
    const double twice = 2.0 * l;
    const long long tl = std::llround(twice);
    if (std::abs(twice - tl) > 1e-12 || tl < -1)
        throw InvalidParams("riccati_jl_real: order must be in N/2, l >= -1/2");
    if (tl % 2 == 0) {
        const int li = static_cast<int>(tl / 2);
        return z * sph_bessel(li, Complex(z)).j_value.real();
    }
    // l = m - 1/2: z j_l(z) = sqrt(pi z / 2) J_m(z).
    const int m = static_cast<int>((tl + 1) / 2);
    return std::sqrt(kPi * z / 2.0) * cyl_bessel_j_int(m, z);
}

}  // namespace itelab::specfun
