#ifndef FDEBLUR_PIPELINE_HPP
#define FDEBLUR_PIPELINE_HPP

#include <string>
#include <vector>

#include "fdeblur/image.hpp"
#include "fdeblur/kernelest.hpp"
#include "fdeblur/latent.hpp"
#include "fdeblur/trace.hpp"

namespace fdeblur::pipeline {

/// Everything the coarse-to-fine driver needs. Regularization weights decay by
/// /1.1 after each latent/kernel alternation, floored at 1e-3.
struct PipelineConfig {
    int kernel_size = 25;
    double scale = 1.4142135623730951;  // sqrt(2)
    int inner_iters = 5;

    double gamma1 = 4e-3;
    double sigma = 1.0;
    double gamma2 = 4e-3;
    double alpha = 0.5;
    double lambda = 1.1;
    int gl_taps = 3;
    double trunc_factor = 2.0;

    double beta_max = 8.0;
    double mu1_max = 1e5;
    double mu2_max = 1e5;
    double mu3_max = 1e5;

    double decay_divisor = 1.1;
    double gamma1_floor = 1e-3;
    double alpha_floor = 1e-3;

    /// The non-blind finisher reruns the latent solver with gamma1 scaled down
    /// by this factor.
    double finisher_gamma1_scale = 0.1;

    bool isotropic_gradient_threshold = true;
    bool exact_l1_prox = false;
    /// Swap the row/column axes of the directional gradients (display aid; the
    /// solvers sum both directions, so results are unaffected).
    bool swap_gradient_axes = false;

    ScheduleTrace* trace = nullptr;
    /// Optional ground truth; enables per-level PSNR diagnostics.
    const Image* ground_truth = nullptr;
};

struct LevelDiagnostics {
    int level = 0;
    int kernel_rows = 0;
    int kernel_cols = 0;
    long zero_count = 0;
    double zero_fraction = 0.0;
    bool has_psnr = false;
    double psnr = 0.0;
};

struct DeblurResult {
    Image restored;
    Kernel kernel;
    std::vector<LevelDiagnostics> levels;
    std::vector<std::string> warnings;
};

/// Estimated kernel from the coarse-to-fine alternation alone (no finisher).
/// The restored field of the result holds the finest-level intermediate image.
DeblurResult estimate_kernel_blind(const Image& y, const PipelineConfig& cfg);

/// Full blind deblurring: coarse-to-fine kernel estimation followed by the
/// non-blind finisher at full resolution.
DeblurResult deblur_blind(const Image& y, const PipelineConfig& cfg);

/// Blind deblurring of an RGB image: the kernel is estimated on the luminance
/// channel and the finisher applied per channel.
struct ColorDeblurResult {
    std::vector<Image> channels;
    Kernel kernel;
    std::vector<LevelDiagnostics> levels;
    std::vector<std::string> warnings;
};
ColorDeblurResult deblur_blind_color(const std::vector<Image>& rgb, const PipelineConfig& cfg);

/// Non-blind restoration used as the finisher: edge-tapered input, latent
/// solver with softened gamma1, output clamped to [0,1].
Image final_nonblind(const Image& y, const Kernel& k, const PipelineConfig& cfg);

/// Blend the image with a periodically blurred copy of itself near the
/// borders, weighted by a window built from the kernel's projection
/// autocorrelations. Pixels at least a kernel radius away from every border
/// are untouched.
Image edge_taper(const Image& y, const Kernel& k);

/// Rec. 601 luma: 0.299 R + 0.587 G + 0.114 B.
Image luminance(const std::vector<Image>& rgb);

}  // namespace fdeblur::pipeline

#endif
