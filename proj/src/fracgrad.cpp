#include "fdeblur/fracgrad.hpp"

#include <stdexcept>

namespace fdeblur::fracgrad {

GLStencil gl_coeffs(double lambda, int taps) {
    if (!(lambda > 0.0))
        throw std::domain_error("fractional order must be positive");
    if (taps < 1)
        throw std::domain_error("stencil needs at least one tap");

    GLStencil st;
    st.order = lambda;
    st.coeffs.resize(taps);
    st.coeffs[0] = 1.0;
    for (int l = 1; l < taps; ++l)
        st.coeffs[l] = st.coeffs[l - 1] * (1.0 - (lambda + 1.0) / l);
    return st;
}

namespace {

void check_extent(const Image& g, const GLStencil& st, GradAxis axis) {
    int extent = axis == GradAxis::H ? g.height() : g.width();
    if (st.taps() > extent)
        throw DimensionError("stencil longer than the grid extent in its direction");
}

}  // namespace

Image frac_grad(const Image& g, const GLStencil& stencil, GradAxis axis, BoundaryMode mode) {
    check_extent(g, stencil, axis);
    const int W = g.width(), H = g.height();
    Image out(W, H);
    for (int r = 0; r < H; ++r) {
        for (int c = 0; c < W; ++c) {
            double acc = 0.0;
            for (int l = 0; l < stencil.taps(); ++l) {
                int rr = axis == GradAxis::H ? resolve_index(r - l, H, mode) : r;
                int cc = axis == GradAxis::V ? resolve_index(c - l, W, mode) : c;
                if (rr < 0 || cc < 0) continue;
                acc += stencil.coeffs[l] * g.at(rr, cc);
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

Image frac_grad_adjoint(const Image& g, const GLStencil& stencil, GradAxis axis,
                        BoundaryMode mode) {
    check_extent(g, stencil, axis);
    const int W = g.width(), H = g.height();
    Image out(W, H, 0.0);
    // scatter form: each forward read u(idx(p - l)) contributes transposed
    for (int r = 0; r < H; ++r) {
        for (int c = 0; c < W; ++c) {
            double v = g.at(r, c);
            if (v == 0.0) continue;
            for (int l = 0; l < stencil.taps(); ++l) {
                int rr = axis == GradAxis::H ? resolve_index(r - l, H, mode) : r;
                int cc = axis == GradAxis::V ? resolve_index(c - l, W, mode) : c;
                if (rr < 0 || cc < 0) continue;
                out.at(rr, cc) += stencil.coeffs[l] * v;
            }
        }
    }
    return out;
}

}  // namespace fdeblur::fracgrad
