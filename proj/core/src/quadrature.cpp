#include "itelab/quadrature.hpp"

#include <cmath>

#include "itelab/errors.hpp"
#include "itelab/util.hpp"

namespace itelab::quadrature {

namespace {

// QUADPACK qk15 abscissae/weights (positive half; rule symmetric about 0).
constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double wgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct PanelResult {
    double kronrod;
    double gauss;
};

PanelResult kg15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = wgk[7] * f(c);
    double resg = wg[3] * f(c);
    for (int i = 0; i < 7; ++i) {
        const double fl = f(c - h * xgk[i]);
        const double fr = f(c + h * xgk[i]);
        resk += wgk[i] * (fl + fr);
        if (i % 2 == 1) resg += wg[i / 2] * (fl + fr);
    }
    return {resk * h, resg * h};
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, int depth, int max_depth) {
    const auto [k, g] = kg15(f, a, b);
    const double err = std::abs(k - g);
    if (err <= tol || err <= 1e-17 * std::abs(k)) return k;
    if (depth >= max_depth)
        throw QuadratureFailure("refinement depth exhausted on panel [" +
                                fmt17(a) + ", " + fmt17(b) + "]");
    const double m = 0.5 * (a + b);
    return adapt(f, a, m, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double kronrod15(const std::function<double(double)>& f, double a, double b) {
    return kg15(f, a, b).kronrod;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_floor, int max_depth) {
    if (a == b) return 0.0;
    const double coarse = std::abs(kg15(f, a, b).kronrod);
    const double tol = std::max(abs_floor, rel_tol * std::max(coarse, abs_floor));
    return adapt(f, a, b, tol, 0, max_depth);
}

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw InvalidParams("gauss_legendre: n >= 1 required");
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton from the Chebyshev-like initial guess; P_n and P_n' by the
    // three-term recurrence.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p, dp;
        for (int iter = 0; iter < 100; ++iter) {
            double pm1 = 1.0, pm2 = 0.0;
            for (int l = 1; l <= n; ++l) {
                const double pl = ((2 * l - 1) * x * pm1 - (l - 1) * pm2) / l;
                pm2 = pm1;
                pm1 = pl;
            }
            p = pm1;
            dp = n * (x * pm1 - pm2) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace itelab::quadrature
