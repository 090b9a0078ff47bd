#ifndef FDEBLUR_SYNTH_HPP
#define FDEBLUR_SYNTH_HPP

#include <cstdint>

#include "fdeblur/image.hpp"

namespace fdeblur::synth {

enum class NoiseKind { None, Gaussian };

/// Additive noise description. Gaussian samples come from a fixed, documented
/// generator (mt19937_64 + Box-Muller) so identical seeds give identical
/// noise fields.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::None;
    double std = 0.0;
    std::uint64_t seed = 0;
};

enum class KernelKind { Delta, Box, Gaussian, LinearMotion };

/// Parameterized kernel family. `size` is the odd support; Gaussian uses
/// `sigma`, LinearMotion uses `length` pixels along `angle_deg`.
struct KernelSpec {
    KernelKind kind = KernelKind::Delta;
    int size = 3;
    double sigma = 1.0;
    int length = 3;
    double angle_deg = 0.0;
};

/// Normalized nonnegative kernel of the requested family.
Kernel make_kernel(const KernelSpec& spec);

/// Forward blur model: convolution, then seeded additive noise, then clamping
/// to [0,1] (camera output). With NoiseKind::None and `clamp` false this is
/// exactly convolve2d.
Image blur(const Image& x, const Kernel& k, BoundaryMode mode, const NoiseSpec& noise,
           bool clamp = true);

/// The seeded Gaussian field added by blur(); exposed for reproducibility
/// tests and solver-theory experiments on unclamped data.
Image noise_field(int width, int height, const NoiseSpec& noise);

}  // namespace fdeblur::synth

#endif
