#include "fdeblur/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace fdeblur::synth {

namespace {

// 53-bit uniform in (0, 1]; the nonzero lower bound keeps log() finite.
double uniform53(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

Kernel make_kernel(const KernelSpec& spec) {
    if (spec.size < 1 || spec.size % 2 == 0)
        throw DimensionError("kernel size must be odd and positive");

    Kernel k(spec.size, spec.size);
    const int c = spec.size / 2;
    switch (spec.kind) {
        case KernelKind::Delta:
            k.at(c, c) = 1.0;
            return k;
        case KernelKind::Box:
            for (double& v : k.weights()) v = 1.0;
            k.normalize();
            return k;
        case KernelKind::Gaussian: {
            if (!(spec.sigma > 0.0))
                throw std::invalid_argument("gaussian kernel needs sigma > 0");
            for (int r = 0; r < spec.size; ++r)
                for (int cc = 0; cc < spec.size; ++cc) {
                    double d2 = static_cast<double>((r - c) * (r - c) + (cc - c) * (cc - c));
                    k.at(r, cc) = std::exp(-d2 / (2.0 * spec.sigma * spec.sigma));
                }
            k.normalize();
            return k;
        }
        case KernelKind::LinearMotion: {
            if (spec.length < 1)
                throw std::invalid_argument("motion length must be positive");
            // One unit point mass per step along the segment, splat bilinearly;
            // axis-aligned lines land exactly on grid pixels.
            const double theta = spec.angle_deg * M_PI / 180.0;
            const double dx = std::cos(theta), dy = -std::sin(theta);
            for (int t = 0; t < spec.length; ++t) {
                double s = t - (spec.length - 1) / 2.0;
                double fr = c + s * dy, fc = c + s * dx;
                int r0 = static_cast<int>(std::floor(fr));
                int c0 = static_cast<int>(std::floor(fc));
                double wr = fr - r0, wc = fc - c0;
                auto put = [&](int r, int col, double w) {
                    if (w > 0.0 && r >= 0 && r < spec.size && col >= 0 && col < spec.size)
                        k.at(r, col) += w;
                };
                put(r0, c0, (1 - wr) * (1 - wc));
                put(r0, c0 + 1, (1 - wr) * wc);
                put(r0 + 1, c0, wr * (1 - wc));
                put(r0 + 1, c0 + 1, wr * wc);
            }
            k.normalize();
            return k;
        }
    }
    throw std::invalid_argument("unknown kernel kind");
}

Image noise_field(int width, int height, const NoiseSpec& noise) {
    Image eps(width, height, 0.0);
    if (noise.kind == NoiseKind::None || noise.std == 0.0) return eps;
    if (noise.std < 0.0)
        throw std::invalid_argument("noise std must be nonnegative");

    std::mt19937_64 rng(noise.seed);
    // Box-Muller on the mt19937_64 stream; both transform outputs are used in
    // order so the field depends only on the seed.
    long n = eps.size();
    for (long i = 0; i < n; i += 2) {
        double u1 = uniform53(rng), u2 = uniform53(rng);
        double radius = std::sqrt(-2.0 * std::log(u1));
        eps.data()[i] = noise.std * radius * std::cos(2.0 * M_PI * u2);
        if (i + 1 < n) eps.data()[i + 1] = noise.std * radius * std::sin(2.0 * M_PI * u2);
    }
    return eps;
}

Image blur(const Image& x, const Kernel& k, BoundaryMode mode, const NoiseSpec& noise,
           bool clamp) {
    Image y = convolve2d(x, k, mode);
    if (noise.kind != NoiseKind::None && noise.std > 0.0) {
        Image eps = noise_field(x.width(), x.height(), noise);
        for (long i = 0; i < y.size(); ++i) y.data()[i] += eps.data()[i];
    }
    if (clamp)
        for (double& v : y.data()) v = std::clamp(v, 0.0, 1.0);
    return y;
}

}  // namespace fdeblur::synth
