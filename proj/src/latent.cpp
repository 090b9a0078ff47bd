#include "fdeblur/latent.hpp"

#include <cmath>

#include "fdeblur/fracgrad.hpp"
#include "fdeblur/spectral.hpp"

namespace fdeblur::latent {

using fracgrad::GradAxis;

Image threshold_a(const Image& x, double gamma1, double sigma, double beta) {
    if (!(beta > 0.0))
        throw std::invalid_argument("threshold_a requires beta > 0");
    const double cut = gamma1 * sigma / beta;
    Image a = x;
    for (double& v : a.data())
        if (v * v < cut) v = 0.0;
    return a;
}

std::pair<Image, Image> threshold_b(const Image& grad_h, const Image& grad_v,
                                    double gamma1, double mu1, bool isotropic) {
    if (!(mu1 > 0.0))
        throw std::invalid_argument("threshold_b requires mu1 > 0");
    if (!grad_h.same_size(grad_v))
        throw DimensionError("gradient pair must share one size");

    const double cut = gamma1 / mu1;
    Image bh = grad_h, bv = grad_v;
    for (long i = 0; i < bh.size(); ++i) {
        double gh = bh.data()[i], gv = bv.data()[i];
        if (isotropic) {
            if (gh * gh + gv * gv < cut) {
                bh.data()[i] = 0.0;
                bv.data()[i] = 0.0;
            }
        } else {
            if (gh * gh < cut) bh.data()[i] = 0.0;
            if (gv * gv < cut) bv.data()[i] = 0.0;
        }
    }
    return {std::move(bh), std::move(bv)};
}

Image estimate_latent(const Image& y, const Kernel& k, const LatentParams& params) {
    if (std::abs(k.sum() - 1.0) > 1e-9)
        throw std::invalid_argument("estimate_latent expects a normalized kernel");

    const int W = y.width(), H = y.height();
    const auto grad = fracgrad::gl_coeffs(1.0, 2);  // ordinary backward difference
    const spectral::Spectrum g_h = spectral::stencil_otf(grad.coeffs, true, W, H);
    const spectral::Spectrum g_v = spectral::stencil_otf(grad.coeffs, false, W, H);
    const spectral::Spectrum f_y = spectral::fft2(y);
    const spectral::Spectrum k_otf = spectral::psf_to_otf(k, W, H);

    const bool use_intensity_prior = params.sigma > 0.0;
    Image x = y;
    double beta = use_intensity_prior ? 2.0 * params.gamma1 * params.sigma : 0.0;
    do {
        Image a = use_intensity_prior ? threshold_a(x, params.gamma1, params.sigma, beta)
                                      : Image(W, H, 0.0);
        if (params.trace) params.trace->beta.push_back(beta);
        double mu1 = 2.0 * params.gamma1;
        do {
            if (params.trace) params.trace->mu1.push_back(mu1);
            Image gh = fracgrad::frac_grad(x, grad, GradAxis::H, BoundaryMode::Periodic);
            Image gv = fracgrad::frac_grad(x, grad, GradAxis::V, BoundaryMode::Periodic);
            auto [bh, bv] = threshold_b(gh, gv, params.gamma1, mu1, params.isotropic);
            x = spectral::solve_x_prefactored(f_y, k_otf, a, bh, bv, beta, mu1, g_h, g_v);
            mu1 *= 2.0;
        } while (mu1 <= params.mu1_max);
        beta *= 2.0;
    } while (use_intensity_prior && beta <= params.beta_max);
    return x;
}

}  // namespace fdeblur::latent
