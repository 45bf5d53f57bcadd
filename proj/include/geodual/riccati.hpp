#pragma once

#include <functional>
#include <vector>

#include "geodual/grids.hpp"
#include "geodual/special_functions.hpp"

namespace geodual {

/// Model parameters shared across the duality pipelines.
///
/// dims N >= 2 spatial dimensions; angmom is the hyperspherical angular
/// momentum l (equal to |m| when N = 2). R0 is the metric radius at the
/// reference point r0, and kappa the Coulomb strength used by the closed
/// forms.
struct ModelParams {
    int dims = 3;
    int angmom = 0;
    double R0 = 1.0;
    double r0 = 1.0;
    double kappa = 0.0;

    void validate() const; // dims>=2, angmom>=0, R0>0, r0>0
};

/// A radial potential U(r) in units of inverse length squared
/// (U = 2*mu*V/hbar^2). Line potentials U(w) reuse the same type.
class PotentialSpec {
public:
    enum class Kind { coulomb_plus_const, pure_coulomb, tabulated, closed_form };

    /// U(r) = kappa/r + kappa^2/(N-1)^2.
    static PotentialSpec coulomb_plus_const(double kappa, int dims);
    /// U(r) = kappa/r.
    static PotentialSpec pure_coulomb(double kappa);
    /// Sampled table, monotone-cubic interpolated between nodes.
    /// Requires >= 8 strictly increasing abscissae and finite values.
    static PotentialSpec tabulated(std::vector<double> r, std::vector<double> U);
    /// Arbitrary callable form.
    static PotentialSpec closed_form(std::function<double(double)> fn);
    /// U identically zero.
    static PotentialSpec zero();

    double operator()(double r) const;

    Kind kind() const { return kind_; }
    double kappa() const { return kappa_; }
    const std::vector<double>& table_r() const { return table_r_; }
    const std::vector<double>& table_u() const { return table_u_; }

private:
    PotentialSpec() = default;
    Kind kind_ = Kind::closed_form;
    double kappa_ = 0.0;
    int dims_ = 3;
    std::vector<double> table_r_, table_u_;
    PchipInterpolant interp_;
    std::function<double(double)> fn_;
};

/// Superpotential W(r) and its running integral S(r) = Int_{r0}^{r} W,
/// so that the metric radius is R(r) = R0 * exp(2 S / (N-1)).
/// Invariants: grids share length, S = 0 at r0 (r0 is a grid node),
/// max_residual comes from re-substitution on the output grid.
struct SuperpotentialSolution {
    std::vector<double> r_grid;
    std::vector<double> W_values;
    std::vector<double> S_values;
    ModelParams params;
    double max_residual = 0.0;
};

/// The right-hand side of the first-order (W, S) system split into its
/// four addends, mostly for term-by-term checks against the 2D form.
struct RiccatiRhsTerms {
    double potential;   // U(r)
    double centrifugal; // (l+(N-1)/2)(l+(N-3)/2)/r^2
    double w_squared;   // -W^2
    double geometry;    // -l(l+N-2)/R0^2 * exp(4S/(1-N))
    double total() const { return potential + centrifugal + w_squared + geometry; }
};

RiccatiRhsTerms riccati_rhs_terms(double r, double W, double S, double U_at_r,
                                  const ModelParams& p);

/// dW/dr for the modified Riccati equation, with dS/dr = W adjoined to
/// carry the memory term. Throws DomainError for r <= 0.
double riccati_rhs(double r, double W, double S, double U_at_r,
                   const ModelParams& p);

/// W(r) = (N-1)/(2r) + kappa/(N-1): the rational solution for
/// U = kappa/r + kappa^2/(N-1)^2 at l = 0.
double closed_form_coulomb_plus_const(double r, const ModelParams& p);
double closed_form_coulomb_plus_const_deriv(double r, const ModelParams& p);

/// W(r) = sqrt(kappa/r) * I0(2 sqrt(kappa r)) / I1(2 sqrt(kappa r)):
/// the N = 3 solution for the pure Coulomb potential at l = 0.
/// Switches to the expansion 1/r + kappa/2 - kappa^2 r/12 for
/// kappa*r < 1e-8. Requires r > 0 and kappa > 0.
double closed_form_coulomb_3d(double r, double kappa);
double closed_form_coulomb_3d_deriv(double r, double kappa);

struct Span {
    double r_start;
    double r_end;
};

struct RiccatiSolveOptions {
    int output_points = 513;
    Spacing spacing = Spacing::log;
    /// Initial S at r_start. The memory term reads
    /// l(l+N-2)/R0^2 * exp(4S/(1-N)), so the seed pins the geometry at the
    /// start of integration: R(r_start) = R0 * exp(2 S_start/(N-1)).
    /// The default 0 means R(r_start) = R0, i.e. r_start acts as r0.
    double S_start = 0.0;
    /// Extra abscissae the integrator must land on exactly.
    std::vector<double> forced_points{};
};

/// Integrate the (W, S) system with an adaptive embedded Runge-Kutta 4(5)
/// pair over [r_start, r_end], landing exactly on every output abscissa.
///
/// After integration S is re-expressed relative to r0 (S(r0) = 0) and the
/// solution's params.R0 is updated to the metric radius at r0, so the
/// output pair (R0, S) describes the same geometry the equation was
/// integrated with. r0 must lie inside the span; it is added to the grid.
///
/// Throws BlowupError (with the pole location) when |W| passes the
/// overflow guard — Riccati solutions can reach poles at finite r — and
/// ConvergenceError when step control fails.
SuperpotentialSolution solve_modified_riccati(const PotentialSpec& U,
                                              const ModelParams& p,
                                              Span span, double W_start,
                                              const Tolerance& tol = {},
                                              const RiccatiSolveOptions& opts = {});

/// Max re-substitution defect of a sampled solution over interior grid
/// nodes, with dW/dr from nonuniform central differences. A diagnostic:
/// finite-difference limited, never throws.
double riccati_residual(const SuperpotentialSolution& sol, const PotentialSpec& U);

/// Same defect pointwise at every node (one-sided differences at the
/// ends); used for the per-row residual column of the CLI output.
std::vector<double> riccati_residual_pointwise(const SuperpotentialSolution& sol,
                                               const PotentialSpec& U);

} // namespace geodual
