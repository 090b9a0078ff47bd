#ifndef FDEBLUR_FRAMELET_HPP
#define FDEBLUR_FRAMELET_HPP

#include <array>
#include <complex>

#include "fdeblur/image.hpp"

namespace fdeblur::framelet {

/// Piecewise-linear B-spline filter bank: one lowpass and two highpass 3-tap
/// filters satisfying |H0|^2 + |H1|^2 + |H2|^2 = 1 at every frequency.
struct FilterBank {
    // taps at offsets -1, 0, +1
    std::array<std::array<double, 3>, 3> filters;
};

/// The fixed bank used throughout: h0 = [1,2,1]/4, h1 = sqrt(2)/4 [1,0,-1],
/// h2 = [-1,2,-1]/4.
const FilterBank& piecewise_linear_bank();

/// Frequency response H(w) = sum_t f[t] e^{-i w t} of a centered 3-tap filter.
std::complex<double> filter_response(const std::array<double, 3>& filter, double omega);

/// Nine undecimated subbands of a single-level separable 2D analysis, each the
/// size of the analyzed grid. Subband (i, j) applies filter i along rows and
/// filter j along columns.
struct FrameletCoeffs {
    int width = 0;
    int height = 0;
    std::array<Image, 9> subbands;

    Image& band(int i, int j) { return subbands[static_cast<size_t>(i) * 3 + j]; }
    const Image& band(int i, int j) const { return subbands[static_cast<size_t>(i) * 3 + j]; }
};

/// Undecimated single-level analysis with periodic extension (correlation with
/// each tensor filter pair).
FrameletCoeffs analyze(const Image& g);

/// Exact adjoint of analyze. Because the bank is a tight frame,
/// synthesize(analyze(g)) == g to machine precision.
Image synthesize(const FrameletCoeffs& coeffs);

}  // namespace fdeblur::framelet

#endif
