#include "dkg/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dkg {

namespace {

double angular_factor(int dim) {
    if (dim == 1) return 2.0;
    if (dim == 3) return 4.0 * std::numbers::pi;
    throw std::invalid_argument("radial_integral: dimension must be 1 or 3");
}

void check_shape(std::span<const double> f, const RadialGrid& grid, const char* who) {
    if (static_cast<int>(f.size()) != grid.node_count)
        throw std::invalid_argument(std::string(who) + ": sample count does not match grid");
}

} // namespace

RadialGrid uniform_grid(double length, double dr) {
    if (!(length > 0.0) || !(dr > 0.0))
        throw std::domain_error("uniform_grid: length and step must be positive");
    int intervals = static_cast<int>(std::ceil(length / dr - 1e-9));
    if (intervals < 15) intervals = 15;
    RadialGrid grid;
    grid.step = dr;
    grid.node_count = intervals + 1;
    grid.length = dr * intervals;
    return grid;
}

RadialGrid make_grid(double omega, double m, double dr) {
    if (!(m > 0.0) || !(omega > 0.0) || !(omega < m))
        throw std::domain_error("make_grid: need 0 < omega < m");
    if (!(dr > 0.0)) throw std::domain_error("make_grid: step must be positive");
    double kappa = std::sqrt(m * m - omega * omega);
    return uniform_grid(10.0 / kappa, dr);
}

double radial_integral(std::span<const double> f, const RadialGrid& grid, int dim) {
    check_shape(f, grid, "radial_integral");
    const double nu = angular_factor(dim);
    const double dr = grid.step;
    const int n = grid.node_count;

    auto weighted = [&](int i) {
        double r = grid.r(i);
        return dim == 1 ? f[i] : f[i] * r * r;
    };

    int intervals = n - 1;
    int simpson_end = intervals; // last node index covered by Simpson pairs
    double tail = 0.0;
    if (intervals % 2 != 0) {
        // odd interval count: 3/8 rule on the final three intervals
        simpson_end = intervals - 3;
        int j = simpson_end;
        tail = 3.0 * dr / 8.0 *
               (weighted(j) + 3.0 * weighted(j + 1) + 3.0 * weighted(j + 2) + weighted(j + 3));
    }
    double sum = 0.0;
    for (int i = 0; i + 2 <= simpson_end; i += 2)
        sum += dr / 3.0 * (weighted(i) + 4.0 * weighted(i + 1) + weighted(i + 2));
    return nu * (sum + tail);
}

std::vector<double> cumulative_integral(std::span<const double> f, double dr) {
    const int n = static_cast<int>(f.size());
    std::vector<double> cum(n, 0.0);
    if (n < 3) {
        for (int i = 1; i < n; ++i)
            cum[i] = cum[i - 1] + 0.5 * dr * (f[i - 1] + f[i]);
        return cum;
    }
    for (int i = 2; i < n; i += 2)
        cum[i] = cum[i - 2] + dr / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    // odd nodes: quadratic through the three nearest samples
    cum[1] = dr / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
    for (int i = 3; i < n; i += 2)
        cum[i] = cum[i - 1] + dr / 12.0 * (-f[i - 2] + 8.0 * f[i - 1] + 5.0 * f[i]);
    return cum;
}

std::vector<double> differentiate(std::span<const double> f, const RadialGrid& grid) {
    check_shape(f, grid, "differentiate");
    const int n = grid.node_count;
    if (n < 5) throw std::invalid_argument("differentiate: need at least 5 nodes");
    const double inv = 1.0 / (12.0 * grid.step);
    std::vector<double> d(n);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * inv;
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * inv;
    for (int i = 2; i < n - 2; ++i)
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv;
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * inv;
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * inv;
    return d;
}

} // namespace dkg
