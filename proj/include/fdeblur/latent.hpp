#ifndef FDEBLUR_LATENT_HPP
#define FDEBLUR_LATENT_HPP

#include <utility>

#include "fdeblur/image.hpp"
#include "fdeblur/trace.hpp"

namespace fdeblur::latent {

/// Weights and penalty schedule of the half-quadratic latent-image solver.
/// beta starts at 2*gamma1*sigma and doubles to beta_max; mu1 starts at
/// 2*gamma1 and doubles to mu1_max.
struct LatentParams {
    double gamma1 = 4e-3;
    double sigma = 1.0;
    double beta_max = 8.0;
    double mu1_max = 1e5;
    bool isotropic = true;  // joint gradient threshold; false tests per component
    ScheduleTrace* trace = nullptr;
};

/// Hard threshold on intensities: keep x where |x|^2 >= gamma1*sigma/beta.
Image threshold_a(const Image& x, double gamma1, double sigma, double beta);

/// Hard threshold on the gradient pair: keep where the (joint or per-component)
/// squared magnitude reaches gamma1/mu1.
std::pair<Image, Image> threshold_b(const Image& grad_h, const Image& grad_v,
                                    double gamma1, double mu1, bool isotropic = true);

/// Intermediate latent image for a fixed kernel: nested doubling loops over
/// beta (intensity auxiliary) and mu1 (gradient auxiliary), each inner step
/// ending in the exact Fourier solve. Starts from x = y.
Image estimate_latent(const Image& y, const Kernel& k, const LatentParams& params);

}  // namespace fdeblur::latent

#endif
