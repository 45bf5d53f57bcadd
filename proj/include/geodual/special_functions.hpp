#pragma once

#include <functional>

namespace geodual {

/// Shared accuracy/iteration budget for the iterative kernels.
struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 100;

    void validate() const; // throws DomainError unless abs_tol>0, rel_tol>0, max_iter>=1
};

/// Principal branch of the Lambert W function, real arguments.
///
/// Halley iteration seeded piecewise: a branch-point series near x = -1/e,
/// log-based guesses for large x. Returns w >= -1 with w*exp(w) = x.
/// Throws DomainError for x < -1/e, ConvergenceError past tol.max_iter.
double lambert_w0(double x, const Tolerance& tol = {});

/// Modified Bessel function of the first kind, orders 0 and 1 only.
///
/// Power series for x <= 15, asymptotic expansion beyond; relative error
/// <= 1e-12 over [0, 30]. Throws DomainError for x < 0 or other orders.
double bessel_i(int order, double x);

/// Root of f on [a, b] given f(a)*f(b) <= 0. Bisection with a secant
/// acceleration step; the bracket never grows, so the result is always
/// inside [a, b]. Converges when the bracket width is <= tol.abs_tol.
double find_root_bracketed(const std::function<double(double)>& f,
                           double a, double b, const Tolerance& tol = {});

} // namespace geodual
