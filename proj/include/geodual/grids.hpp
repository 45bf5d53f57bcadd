#pragma once

#include <cstddef>
#include <vector>

namespace geodual {

enum class Spacing { linear, log };

/// n >= 2 points from a to b inclusive, evenly spaced.
std::vector<double> linspace(double a, double b, int n);

/// n >= 2 points from a to b inclusive, evenly spaced in log; requires a, b > 0.
std::vector<double> logspace(double a, double b, int n);

std::vector<double> make_grid(double a, double b, int n, Spacing spacing);

/// Monotone cubic interpolant (Fritsch-Carlson). C^1, no overshoot on
/// monotone data. Nodes must be strictly increasing, >= 2 of them.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double min_x() const { return x_.front(); }
    double max_x() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::size_t interval(double x) const;
    std::vector<double> x_, y_, d_; // nodes, values, node derivatives
};

/// Finite-difference weights (Fornberg 1988): weights[k][j] multiplies
/// f(x[j]) to approximate the k-th derivative at x0, for k = 0..max_order.
/// Exact for polynomials of degree n-1 on arbitrary nodes.
std::vector<std::vector<double>> fornberg_weights(const std::vector<double>& x,
                                                  double x0, int max_order);

/// k-th derivative of tabulated data at node index i using an
/// (order+1)-point stencil clamped to the table bounds (central in the
/// interior, one-sided at the edges).
double fd_derivative_at_node(const std::vector<double>& x,
                             const std::vector<double>& y,
                             std::size_t i, int deriv, int stencil_points = 5);

/// Same, at an arbitrary abscissa inside [x.front(), x.back()].
double fd_derivative_at(const std::vector<double>& x,
                        const std::vector<double>& y,
                        double x0, int deriv, int stencil_points = 5);

} // namespace geodual
