#ifndef FDEBLUR_FRACGRAD_HPP
#define FDEBLUR_FRACGRAD_HPP

#include <vector>

#include "fdeblur/image.hpp"

namespace fdeblur::fracgrad {

/// Direction of the one-sided Grunwald-Letnikov sum: H shifts the first grid
/// index (rows), V shifts the second (columns), matching u(i-l, j) / u(i, j-l).
enum class GradAxis { H, V };

/// Signed Grunwald-Letnikov coefficients g_l = (-1)^l C(lambda, l).
struct GLStencil {
    double order = 1.0;
    std::vector<double> coeffs;

    int taps() const { return static_cast<int>(coeffs.size()); }
};

/// Coefficients via the stable multiplicative recurrence
/// g_0 = 1, g_l = g_{l-1} (1 - (lambda + 1)/l). Throws on lambda <= 0 or L < 1.
GLStencil gl_coeffs(double lambda, int taps);

/// Fractional-order directional gradient: out(i,j) = sum_l g_l u(i-l,j) along H
/// or sum_l g_l u(i,j-l) along V, with out-of-range reads resolved per mode.
Image frac_grad(const Image& g, const GLStencil& stencil, GradAxis axis, BoundaryMode mode);

/// Exact adjoint of frac_grad for the same stencil, axis and mode:
/// <frac_grad(f), g> == <f, frac_grad_adjoint(g)>.
Image frac_grad_adjoint(const Image& g, const GLStencil& stencil, GradAxis axis,
                        BoundaryMode mode);

}  // namespace fdeblur::fracgrad

#endif
