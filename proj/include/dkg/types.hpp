#pragma once

#include <vector>

#include "dkg/grid.hpp"

namespace dkg {

/// Physical configuration of the coupled spinor/boson system.
struct PhysParams {
    int dim = 3;        ///< spatial dimension, 1 or 3
    double m = 1.0;     ///< spinor mass, > 0
    double M = 1.0;     ///< boson mass, >= 0
    double g = 1.0;     ///< Yukawa coupling, > 0
    double omega = 0.5; ///< frequency, in (0, m)
};

/// Throws std::domain_error on invalid parameter combinations.
void validate(const PhysParams& params);

/// Radial components of the spinor ansatz on a grid. u(0) = 0, v(0) > 0, both
/// real; in 1D the profiles are the x >= 0 half of an even v / odd u pair.
struct SpinorProfile {
    RadialGrid grid;
    std::vector<double> v;
    std::vector<double> u;
};

/// Real scalar (boson) field on a grid. `shifted` marks the non-decaying
/// representation h* used by the massless constructions.
struct ScalarProfile {
    RadialGrid grid;
    std::vector<double> values;
    double mass = 0.0;
    bool shifted = false;
};

enum class Gauge { raw, unit_coupling };

/// Which virial identity applies to a wave.
enum class EpsilonMode { nld_cubic, dkg_massive, dkg_massless };

/// One row of the iteration trace: coupling, initial data, charge, energy,
/// their unit-coupling images, and the virial residual.
struct TraceRow {
    int iteration = 0;
    double g = 0.0;
    double v0 = 0.0;
    double h0 = 0.0;
    double Q = 0.0;
    double E = 0.0;
    double Qt = 0.0;
    double Et = 0.0;
    double eps = 0.0;
};

struct SolitaryWave {
    PhysParams params;
    SpinorProfile spinor;
    ScalarProfile scalar;
    Gauge gauge = Gauge::raw;
    EpsilonMode mode = EpsilonMode::dkg_massive;
    std::vector<TraceRow> trace;
    bool converged = true;
};

} // namespace dkg
