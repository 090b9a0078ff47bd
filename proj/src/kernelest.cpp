#include "fdeblur/kernelest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fdeblur/fracgrad.hpp"
#include "fdeblur/spectral.hpp"

namespace fdeblur::kernelest {

using fracgrad::GradAxis;

framelet::FrameletCoeffs threshold_c(const framelet::FrameletCoeffs& wk, double gamma2,
                                     double mu2) {
    if (!(mu2 > 0.0))
        throw std::invalid_argument("threshold_c requires mu2 > 0");
    const double cut = gamma2 / mu2;
    framelet::FrameletCoeffs out = wk;
    for (Image& band : out.subbands)
        for (double& v : band.data())
            if (v * v < cut) v = 0.0;
    return out;
}

Image update_d(const Image& k, const Image& bregman) {
    if (!k.same_size(bregman))
        throw DimensionError("d-update grids must share the kernel support");
    Image d = k;
    for (long i = 0; i < d.size(); ++i) d.data()[i] += bregman.data()[i];
    return d;
}

Image update_bregman(const Image& bregman, const Image& k, const Image& d) {
    if (!bregman.same_size(k) || !bregman.same_size(d))
        throw DimensionError("bregman-update grids must share the kernel support");
    Image b = bregman;
    for (long i = 0; i < b.size(); ++i) b.data()[i] += k.data()[i] - d.data()[i];
    return b;
}

std::pair<Image, Image> truncate_gradients(const Image& grad_h, const Image& grad_v,
                                           int k_rows, int k_cols, double factor) {
    if (!grad_h.same_size(grad_v))
        throw DimensionError("gradient pair must share one size");
    if (!(factor > 0.0))
        throw std::invalid_argument("truncation factor must be positive");

    const long n = grad_h.size();
    const long quota = static_cast<long>(
        std::ceil(factor * static_cast<double>(k_rows) * k_cols));

    constexpr int kBins = 4;  // directions quantized modulo 180 degrees
    std::vector<std::vector<long>> bins(kBins);
    std::vector<double> mag2(n);
    for (long i = 0; i < n; ++i) {
        double gh = grad_h.data()[i], gv = grad_v.data()[i];
        mag2[i] = gh * gh + gv * gv;
        if (mag2[i] == 0.0) continue;
        double angle = std::atan2(gv, gh);  // [-pi, pi]
        if (angle < 0.0) angle += M_PI;     // fold opposite directions together
        int bin = std::min(static_cast<int>(angle / (M_PI / kBins)), kBins - 1);
        bins[bin].push_back(i);
    }

    std::vector<char> keep(n, 0);
    for (auto& idx : bins) {
        if (static_cast<long>(idx.size()) > quota) {
            std::nth_element(idx.begin(), idx.begin() + quota, idx.end(),
                             [&](long a, long b) {
                                 return mag2[a] != mag2[b] ? mag2[a] > mag2[b] : a < b;
                             });
            idx.resize(quota);
        }
        for (long i : idx) keep[i] = 1;
    }

    Image out_h(grad_h.width(), grad_h.height());
    Image out_v(grad_v.width(), grad_v.height());
    for (long i = 0; i < n; ++i) {
        if (!keep[i]) continue;
        out_h.data()[i] = grad_h.data()[i];
        out_v.data()[i] = grad_v.data()[i];
    }
    return {std::move(out_h), std::move(out_v)};
}

Kernel estimate_kernel(const Image& y, const Image& x, int rows, int cols,
                       const Kernel& warm, const KernelParams& params) {
    if (rows % 2 == 0 || cols % 2 == 0 || rows < 1 || cols < 1)
        throw DimensionError("kernel support must be odd and positive");
    if (!y.same_size(x))
        throw DimensionError("blurred and latent images must share one size");
    if (rows > y.height() || cols > y.width())
        throw DimensionError("kernel support exceeds the image");
    if (params.alpha < 0.0 || params.alpha > 1.0)
        throw std::invalid_argument("alpha must lie in [0, 1]");

    const auto stencil = fracgrad::gl_coeffs(params.lambda, params.gl_taps);
    const GradAxis ax_h = params.swap_axes ? GradAxis::V : GradAxis::H;
    const GradAxis ax_v = params.swap_axes ? GradAxis::H : GradAxis::V;
    Image gx_h = fracgrad::frac_grad(x, stencil, ax_h, BoundaryMode::Periodic);
    Image gx_v = fracgrad::frac_grad(x, stencil, ax_v, BoundaryMode::Periodic);
    const Image gy_h = fracgrad::frac_grad(y, stencil, ax_h, BoundaryMode::Periodic);
    const Image gy_v = fracgrad::frac_grad(y, stencil, ax_v, BoundaryMode::Periodic);
    std::tie(gx_h, gx_v) =
        truncate_gradients(gx_h, gx_v, rows, cols, params.trunc_factor);

    const auto solve_data = spectral::prefactor_kernel_solve(gx_h, gx_v, gy_h, gy_v);

    Kernel k = warm.rows() > 0 ? warm : Kernel::delta(rows, cols);
    if (k.rows() != rows || k.cols() != cols)
        throw DimensionError("warm-start kernel must match the requested support");
    Image bregman(cols, rows, 0.0);

    double mu2 = 2.0 * params.gamma2;
    do {
        if (params.trace) params.trace->mu2.push_back(mu2);
        framelet::FrameletCoeffs c =
            threshold_c(framelet::analyze(k.as_grid()), params.gamma2, mu2);
        Image wtc = framelet::synthesize(c);

        double mu3 = 2.0 * mu2;
        do {
            if (params.trace) params.trace->mu3.push_back(mu3);
            if (!(std::abs(params.gamma2 * params.alpha / mu3) < 1.0))
                throw std::logic_error("schedule violated gamma2*alpha/mu3 < 1");
            Image d = update_d(k.as_grid(), bregman);
            if (params.exact_l1_prox) {
                const double shift = params.gamma2 * params.alpha / (2.0 * mu3);
                for (double& v : d.data())
                    if (v != 0.0) v += v > 0.0 ? shift : -shift;
            }
            bregman = update_bregman(bregman, k.as_grid(), d);
            k = Kernel::from_grid(
                spectral::extract_kernel_window(
                    spectral::solve_k_image_prefactored(solve_data, d, wtc, mu2, mu3),
                    rows, cols));
            k.clamp_nonnegative();
            k.normalize();
            mu3 *= 2.0;
        } while (mu3 <= params.mu3_max);
        mu2 *= 2.0;
    } while (mu2 <= params.mu2_max);
    return k;
}

}  // namespace fdeblur::kernelest
