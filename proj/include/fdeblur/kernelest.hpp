#ifndef FDEBLUR_KERNELEST_HPP
#define FDEBLUR_KERNELEST_HPP

#include <utility>

#include "fdeblur/framelet.hpp"
#include "fdeblur/image.hpp"
#include "fdeblur/trace.hpp"

namespace fdeblur::kernelest {

/// Weights and penalty schedule of the framelet-domain kernel estimator.
/// mu2 starts at 2*gamma2 and doubles to mu2_max; mu3 restarts at 2*mu2 for
/// every outer iteration and doubles to mu3_max, which keeps gamma2*alpha/mu3
/// strictly below one.
struct KernelParams {
    double gamma2 = 4e-3;
    double alpha = 0.5;    // weight of the subtracted l1 term, in [0, 1]
    double lambda = 1.1;   // fractional gradient order
    int gl_taps = 3;
    double mu2_max = 1e5;
    double mu3_max = 1e5;
    double trunc_factor = 2.0;
    /// Off by default: Es27 as printed returns k + b; this adds the concave-l1
    /// proximal shift (gamma2*alpha / (2*mu3)) * sign(k + b) for experiments.
    bool exact_l1_prox = false;
    /// Swap which grid axis the h/v gradients walk (no effect on the solve,
    /// which sums both directions; kept for display comparisons).
    bool swap_axes = false;
    ScheduleTrace* trace = nullptr;
};

/// Hard threshold on framelet coefficients: keep where |wk|^2 >= gamma2/mu2.
framelet::FrameletCoeffs threshold_c(const framelet::FrameletCoeffs& wk, double gamma2,
                                     double mu2);

/// Split-Bregman d-update as printed: d = k + bregman.
Image update_d(const Image& k, const Image& bregman);

/// Bregman residual update: bregman + (k - d).
Image update_bregman(const Image& bregman, const Image& k, const Image& d);

/// Keep only the strongest gradients: within each of four quantized direction
/// bins the top ceil(factor * k_rows * k_cols) magnitudes survive, everything
/// else is zeroed. Both components of a retained pixel are kept together.
std::pair<Image, Image> truncate_gradients(const Image& grad_h, const Image& grad_v,
                                           int k_rows, int k_cols, double factor);

/// PSF estimate for a fixed latent image: fractional gradients of x (truncated)
/// and y feed the nested doubling loops over mu2 (framelet thresholding) and
/// mu3 (split-Bregman + Fourier solve). `warm` seeds the first framelet
/// threshold; pass a default-constructed Kernel to start from a centered delta.
Kernel estimate_kernel(const Image& y, const Image& x, int rows, int cols,
                       const Kernel& warm, const KernelParams& params);

}  // namespace fdeblur::kernelest

#endif
