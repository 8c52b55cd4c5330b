#pragma once

#include <functional>
#include <vector>

namespace itelab::quadrature {

// Adaptive Gauss-Kronrod (G7,K15) integration of a smooth real integrand.
// Panels are bisected until the local K-G discrepancy meets the tolerance
// budget; rel_tol defaults to the project-wide 1e-11 target with an absolute
// floor of 1e-14. Throws QuadratureFailure past max_depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-11, double abs_floor = 1e-14,
                 int max_depth = 60);

// Single non-adaptive K15 panel; machine-accurate on short smooth panels.
double kronrod15(const std::function<double(double)>& f, double a, double b);

// Gauss-Legendre rule with n nodes on [-1,1]; nodes ascending.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

}  // namespace itelab::quadrature
