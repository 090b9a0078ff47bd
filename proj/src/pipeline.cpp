#include "fdeblur/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "fdeblur/metrics.hpp"

namespace fdeblur::pipeline {

namespace {

latent::LatentParams latent_params(const PipelineConfig& cfg, double gamma1) {
    latent::LatentParams p;
    p.gamma1 = gamma1;
    p.sigma = cfg.sigma;
    p.beta_max = cfg.beta_max;
    p.mu1_max = cfg.mu1_max;
    p.isotropic = cfg.isotropic_gradient_threshold;
    p.trace = cfg.trace;
    return p;
}

kernelest::KernelParams kernel_params(const PipelineConfig& cfg, double alpha) {
    kernelest::KernelParams p;
    p.gamma2 = cfg.gamma2;
    p.alpha = alpha;
    p.lambda = cfg.lambda;
    p.gl_taps = cfg.gl_taps;
    p.mu2_max = cfg.mu2_max;
    p.mu3_max = cfg.mu3_max;
    p.trunc_factor = cfg.trunc_factor;
    p.exact_l1_prox = cfg.exact_l1_prox;
    p.swap_axes = cfg.swap_gradient_axes;
    p.trace = cfg.trace;
    return p;
}

double decay(double v, double divisor, double floor) {
    return std::max(v / divisor, floor);
}

double grid_dynamic_range(const Image& g) {
    auto [lo, hi] = std::minmax_element(g.data().begin(), g.data().end());
    return *hi - *lo;
}

}  // namespace

Image luminance(const std::vector<Image>& rgb) {
    if (rgb.size() != 3 || !rgb[0].same_size(rgb[1]) || !rgb[0].same_size(rgb[2]))
        throw DimensionError("luminance expects three equally sized channels");
    Image y(rgb[0].width(), rgb[0].height());
    for (long i = 0; i < y.size(); ++i)
        y.data()[i] = 0.299 * rgb[0].data()[i] + 0.587 * rgb[1].data()[i] +
                      0.114 * rgb[2].data()[i];
    return y;
}

Image edge_taper(const Image& y, const Kernel& k) {
    const int radius_r = k.center_row(), radius_c = k.center_col();
    if (radius_r == 0 && radius_c == 0) return y;

    // Per-axis projections of the kernel and their normalized autocorrelations.
    auto projection = [&](bool rows) {
        std::vector<double> p(rows ? k.rows() : k.cols(), 0.0);
        for (int r = 0; r < k.rows(); ++r)
            for (int c = 0; c < k.cols(); ++c) p[rows ? r : c] += k.at(r, c);
        return p;
    };
    auto autocorr = [](const std::vector<double>& p) {
        std::vector<double> rho(p.size(), 0.0);
        for (size_t lag = 0; lag < p.size(); ++lag)
            for (size_t t = 0; t + lag < p.size(); ++t) rho[lag] += p[t] * p[t + lag];
        if (rho[0] > 0.0)
            for (double& v : rho) v /= rho[0];
        return rho;
    };
    // Border weight ramps from 0 at the edge to 1 at the kernel radius; beyond
    // the radius the image is left untouched.
    auto axis_weights = [&](const std::vector<double>& rho, int radius, int n) {
        std::vector<double> w(n, 1.0);
        for (int i = 0; i < n; ++i) {
            int d = std::min(i, n - 1 - i);
            if (d < radius)
                w[i] = 1.0 - rho[d] * (1.0 - static_cast<double>(d) / radius);
        }
        return w;
    };

    const auto w_row = axis_weights(autocorr(projection(true)), radius_r, y.height());
    const auto w_col = axis_weights(autocorr(projection(false)), radius_c, y.width());

    Image blurred = convolve2d(y, k, BoundaryMode::Periodic);
    Image out(y.width(), y.height());
    for (int r = 0; r < y.height(); ++r)
        for (int c = 0; c < y.width(); ++c) {
            double w = w_row[r] * w_col[c];
            out.at(r, c) = w * y.at(r, c) + (1.0 - w) * blurred.at(r, c);
        }
    return out;
}

Image final_nonblind(const Image& y, const Kernel& k, const PipelineConfig& cfg) {
    Image tapered = edge_taper(y, k);
    Image x = latent::estimate_latent(
        tapered, k, latent_params(cfg, cfg.gamma1 * cfg.finisher_gamma1_scale));
    for (double& v : x.data()) v = std::clamp(v, 0.0, 1.0);
    return x;
}

DeblurResult estimate_kernel_blind(const Image& y, const PipelineConfig& cfg) {
    if (cfg.kernel_size < 3 || cfg.kernel_size % 2 == 0)
        throw DimensionError("kernel size must be odd and at least 3");

    DeblurResult result;
    if (grid_dynamic_range(y) < 1e-12)
        result.warnings.push_back(
            "input has no gradient information; kernel is unidentifiable");

    const auto levels = build_pyramid(y, cfg.kernel_size, cfg.scale);
    double gamma1 = cfg.gamma1;
    double alpha = cfg.alpha;
    Kernel k = Kernel::delta(levels.front().kernel_size, levels.front().kernel_size);
    Image x;

    for (size_t li = 0; li < levels.size(); ++li) {
        const Image& y_level = levels[li].image;
        const int ksize = levels[li].kernel_size;
        try {
            for (int i = 0; i < cfg.inner_iters; ++i) {
                x = latent::estimate_latent(y_level, k, latent_params(cfg, gamma1));
                k = kernelest::estimate_kernel(y_level, x, ksize, ksize, k,
                                               kernel_params(cfg, alpha));
                gamma1 = decay(gamma1, cfg.decay_divisor, cfg.gamma1_floor);
                alpha = decay(alpha, cfg.decay_divisor, cfg.alpha_floor);
                if (cfg.trace) {
                    cfg.trace->gamma1.push_back(gamma1);
                    cfg.trace->alpha.push_back(alpha);
                }
            }
        } catch (const DegenerateKernelError& e) {
            throw PipelineError(static_cast<int>(li),
                                std::string(e.what()) + " (pyramid level " +
                                    std::to_string(li) + ")");
        }

        LevelDiagnostics diag;
        diag.level = static_cast<int>(li);
        diag.kernel_rows = k.rows();
        diag.kernel_cols = k.cols();
        for (double w : k.weights())
            if (w == 0.0) ++diag.zero_count;
        diag.zero_fraction =
            static_cast<double>(diag.zero_count) / (k.rows() * k.cols());
        if (cfg.ground_truth) {
            Image truth_level = resample_bilinear(*cfg.ground_truth, y_level.width(),
                                                  y_level.height());
            diag.has_psnr = true;
            diag.psnr = metrics::psnr(x, truth_level);
        }
        result.levels.push_back(diag);

        if (li + 1 < levels.size())
            k = resize_kernel(k, levels[li + 1].kernel_size, levels[li + 1].kernel_size);
    }

    result.kernel = k;
    result.restored = x;
    return result;
}

DeblurResult deblur_blind(const Image& y, const PipelineConfig& cfg) {
    DeblurResult result = estimate_kernel_blind(y, cfg);
    result.restored = final_nonblind(y, result.kernel, cfg);
    return result;
}

ColorDeblurResult deblur_blind_color(const std::vector<Image>& rgb,
                                     const PipelineConfig& cfg) {
    DeblurResult gray = estimate_kernel_blind(luminance(rgb), cfg);
    ColorDeblurResult result;
    result.kernel = gray.kernel;
    result.levels = std::move(gray.levels);
    result.warnings = std::move(gray.warnings);
    for (const Image& channel : rgb)
        result.channels.push_back(final_nonblind(channel, result.kernel, cfg));
    return result;
}

}  // namespace fdeblur::pipeline
