#pragma once

#include <optional>
#include <vector>

#include "geodual/riccati.hpp"

namespace geodual {

/// Metric radius profile R over a radial (or line) coordinate, defining
/// (ds)^2 = dr^2 + R^2(r) dOmega^2. Closed forms carry analytic
/// derivatives; tabulated profiles differentiate by finite differences
/// (4th-order stencils in the interior, one-sided at the edges).
class GeometryProfile {
public:
    enum class Kind { closed_form_coulomb, ellis, tabulated };

    /// R(r) = K r exp(2 kappa r / (N-1)^2), the Coulomb-plus-constant geometry.
    static GeometryProfile coulomb_closed_form(double K, double kappa, int dims);
    /// R(w) = sqrt(R0^2 + w^2) on the full line.
    static GeometryProfile ellis(double R0);
    /// Sampled profile; grid strictly increasing, R > 0 everywhere.
    static GeometryProfile tabulated(std::vector<double> grid, std::vector<double> R);

    double radius(double x) const;
    double radius_deriv(double x) const;
    double radius_deriv2(double x) const;

    Kind kind() const { return kind_; }
    double K() const { return K_; }
    double kappa() const { return kappa_; }
    int dims() const { return dims_; }
    double R0() const { return R0_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

private:
    GeometryProfile() = default;
    Kind kind_ = Kind::ellis;
    double K_ = 1.0, kappa_ = 0.0;
    int dims_ = 3;
    double R0_ = 1.0;
    std::vector<double> grid_, values_;
};

/// Lorentz-embedding samples for the Coulomb geometry in isotropic
/// coordinates: r(rho), dr/drho and c dt/drho on a rho grid. rho_min is
/// set exactly when K < 1 (the embedding stops being real below it).
struct EmbeddingProfile {
    std::vector<double> rho_grid;
    std::vector<double> r_of_rho;
    std::vector<double> dr_drho;
    std::vector<double> cdt_drho;
    std::optional<double> rho_min;
};

/// R(r) = R0 * exp(2 S(r)/(N-1)) sampled on the solution grid;
/// R(r0) = R0 exactly since S(r0) = 0 by convention.
GeometryProfile radius_from_superpotential(const SuperpotentialSolution& sol);

/// The flat-space potential with the same radial dynamics as free motion
/// on the profile, for angular momentum l:
///   U = (N-1)/2 (ln R)'' + ((N-1)/2)^2 ((ln R)')^2
///       + l(l+N-2)/R^2 - (l+(N-1)/2)(l+(N-3)/2)/r^2.
/// Closed-form profiles return a callable form; tabulated profiles return
/// a table sampled on their own grid (a derivative-quality warning is
/// logged when the grid looks too coarse for second differences).
PotentialSpec potential_from_geometry(const GeometryProfile& g, int dims, int angmom);

/// Pointwise evaluation of the formula above.
double potential_from_geometry_at(const GeometryProfile& g, double r,
                                  int dims, int angmom);

/// Isotropic radial coordinate rho = K r exp(2 kappa r/(N-1)^2).
double isotropic_rho(double r, double K, double kappa, int dims);

struct RadialFromIsotropic {
    double r;
    double dr_drho;
};

/// Inverse of isotropic_rho via the principal Lambert branch:
///   r = (N-1)^2/(2 kappa) W0(2 kappa rho/(K (N-1)^2)),
/// with the exact degenerate limit r = rho/K at kappa = 0.
/// kappa < 0 is out of scope and throws DomainError.
RadialFromIsotropic r_of_rho(double rho, double K, double kappa, int dims,
                             const Tolerance& tol = {});

/// Radicand of the embedding time derivative:
/// (1+W0)^2 - ((N-1)^2 W0/(2 kappa rho))^2 at W0 = W0(2 kappa rho/(K(N-1)^2)).
double embedding_radicand(double rho, double K, double kappa, int dims,
                          const Tolerance& tol = {});

/// c dt/drho = sqrt(radicand)/(1+W0). Throws EmbeddingComplexError
/// (carrying the radicand) when the embedding is not real, which signals
/// rho < rho_min for K < 1.
double embedding_cdt_drho(double rho, double K, double kappa, int dims,
                          const Tolerance& tol = {});

/// Positive root of the embedding radicand for 0 < K < 1, kappa > 0.
/// Bracketed and bisected; the radicand is increasing in rho so the root
/// is unique.
double rho_min(double K, double kappa, int dims, const Tolerance& tol = {});

/// sqrt(R0^2 + w^2): the Ellis wormhole radius, minimum R0 at the throat.
double ellis_radius(double w, double R0);

/// Sample the embedding on a log-spaced rho grid. For K < 1 the grid is
/// clipped to start at rho_min (first emitted row sits on it).
EmbeddingProfile build_embedding_profile(double K, double kappa, int dims,
                                         double rho_start, double rho_stop,
                                         int count, const Tolerance& tol = {});

} // namespace geodual
