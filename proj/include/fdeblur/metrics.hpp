#ifndef FDEBLUR_METRICS_HPP
#define FDEBLUR_METRICS_HPP

#include <optional>
#include <string>

#include "fdeblur/image.hpp"

namespace fdeblur::metrics {

/// Peak signal-to-noise ratio in dB for [0,1]-range images, capped at 100 dB
/// (the value reported for identical inputs).
double psnr(const Image& a, const Image& b);

/// Gaussian-windowed structural similarity (11x11 window, sigma 1.5, K1=0.01,
/// K2=0.03 on unit dynamic range). The window shrinks on images smaller than
/// 11 pixels in either dimension.
double ssim(const Image& a, const Image& b);

/// Multi-scale SSIM over five dyadic scales with the standard exponents.
/// Requires at least 32x32 input so every scale keeps at least two samples.
double ms_ssim(const Image& a, const Image& b);

/// Highest normalized cross-correlation over all relative translations of two
/// normalized kernels; 1 means identical up to translation.
double kernel_xcorr(const Kernel& k1, const Kernel& k2);

struct MetricReport {
    double psnr = 0.0;
    double ssim = 0.0;
    double ms_ssim = 0.0;
    std::optional<double> kernel_xcorr;
};

MetricReport evaluate(const Image& restored, const Image& truth);

/// Line-oriented wire format: one `name=value` pair per line, six fixed
/// decimals, stable across runs.
std::string serialize(const MetricReport& report);

}  // namespace fdeblur::metrics

#endif
