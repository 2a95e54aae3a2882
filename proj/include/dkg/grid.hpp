#pragma once

#include <span>
#include <vector>

namespace dkg {

/// Uniform grid on [0, L] with nodes r_i = i*step.
struct RadialGrid {
    double length = 0.0;
    double step = 0.0;
    int node_count = 0;

    double r(int i) const { return step * i; }
};

/// Grid sized to the linear decay scale of a solitary wave,
/// L = 10/sqrt(m^2 - omega^2), rounded up to a whole number of steps.
/// Throws std::domain_error unless 0 < omega < m.
RadialGrid make_grid(double omega, double m, double dr);

/// Uniform grid covering [0, length] (length rounded up to a step multiple).
RadialGrid uniform_grid(double length, double dr);

/// nu_n * integral_0^L f(r) r^(n-1) dr by composite Simpson, with the angular
/// factors nu_1 = 2 (even extension to the line) and nu_3 = 4*pi. When the
/// interval count is odd the last three intervals use the 3/8 rule.
double radial_integral(std::span<const double> f, const RadialGrid& grid, int dim);

/// Prefix integrals cum[i] = integral_0^{r_i} f dr. Simpson over interval
/// pairs; odd endpoints take a single quadratic step from the previous even
/// anchor, so every node is O(dr^4) accurate.
std::vector<double> cumulative_integral(std::span<const double> f, double dr);

/// First derivative by 4th-order central differences, one-sided stencils of
/// the same order on the two outermost nodes of each end.
std::vector<double> differentiate(std::span<const double> f, const RadialGrid& grid);

} // namespace dkg
