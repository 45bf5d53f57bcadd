#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "geodual/geometry.hpp"

namespace geodual {

/// 1D line potential U(w) equivalent to free motion on an asymptotically
/// flat wormhole profile. support_halfwidth marks where |U| has dropped
/// to ~1e-6 of its peak scale; u_scale caches the peak magnitude.
struct LinePotential {
    std::function<double(double)> U;
    int dims = 3;
    int angmom = 0;
    double R0 = 1.0;
    double support_halfwidth = 0.0;
    double u_scale = 0.0;
};

/// Complex transmission/reflection amplitudes at energy epsilon = k^2.
/// Convention: incidence from w = +inf with unit flux; reflection is the
/// elastic (upper-branch) channel, transmission the flux emerging on the
/// lower branch. flux_defect = |t|^2 + |r|^2 - 1 measures solver error.
struct ScatteringAmplitudes {
    double epsilon = 0.0;
    double k = 0.0;
    std::complex<double> t;
    std::complex<double> r;
    double flux_defect = 0.0;
};

/// Energy sweep of the elastic channel. eta = |r| is the inelasticity
/// (eta < 1 means probability flows through the bridge), delta the
/// elastic phase with S = -r = eta exp(2 i delta), and argand the samples
/// (S - 1)/(2i), which lie in the disk of radius 1/2 about i/2.
struct PhaseShiftRecord {
    std::vector<double> epsilon_grid;
    std::vector<double> eta;
    std::vector<double> delta;
    std::vector<std::complex<double>> argand;
    std::vector<ScatteringAmplitudes> amplitudes;
};

/// U(w) = (N-1)/2 R''/R + (N-1)(N-3)/4 (R'/R)^2 + l(l+N-2)/R^2 evaluated
/// from the profile's derivatives (analytic for Ellis, finite differences
/// for tabulated input).
LinePotential line_potential_from_geometry(const GeometryProfile& g,
                                           int dims, int angmom);

/// Closed form for the Ellis profile R^2 = R0^2 + w^2:
/// (N+2l-3)(N+2l-1)/(4R^2) - (N-1)(N-5) R0^2/(4R^4).
double ellis_line_potential(double w, int dims, int angmom, double R0);

/// Coefficient of the R0^2/R^4 term, -(N-1)(N-5)/4: repulsive for N <= 4,
/// zero at N = 5, attractive for N >= 6.
double ellis_quartic_coefficient(int dims);

/// LinePotential backed by the closed form above.
LinePotential make_ellis_line_potential(int dims, int angmom, double R0);

enum class IncidentSide { positive, negative };

struct ScatteringNumerics {
    /// Grid step; 0 selects kh_target / k_eff automatically.
    double step = 0.0;
    /// Half-window w_max; 0 selects the smallest w with
    /// |U(+-w)| <= tail_fraction * epsilon (capped at max_window).
    double window = 0.0;
    double kh_target = 0.04;
    double tail_fraction = 1e-10;
    double max_window = 5e6;
    IncidentSide incident_side = IncidentSide::positive;
};

/// Solve psi'' + (epsilon - U) psi = 0 on [-w_max, w_max] with the
/// Numerov recurrence, starting from a pure transmitted wave and
/// decomposing the far end against absolute plane waves exp(-+ikw).
/// Throws ResolutionError when k*h > 0.5 (k*h <= 0.1 recommended);
/// energies below the barrier only log a note (tunneling is physical).
ScatteringAmplitudes solve_scattering(const LinePotential& U, double epsilon,
                                      const ScatteringNumerics& numerics = {});

/// Independent solve per energy; with jobs > 1 the energies are mapped
/// over a small thread pool, results ordered by input index.
PhaseShiftRecord phase_shift_sweep(const LinePotential& U,
                                   const std::vector<double>& epsilon_grid,
                                   const ScatteringNumerics& numerics = {},
                                   int jobs = 1);

} // namespace geodual
