#ifndef FDEBLUR_SPECTRAL_HPP
#define FDEBLUR_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "fdeblur/image.hpp"

namespace fdeblur::spectral {

/// Full complex 2D spectrum, row-major, same layout as Image.
struct Spectrum {
    int width = 0;
    int height = 0;
    std::vector<std::complex<double>> values;

    Spectrum() = default;
    Spectrum(int w, int h) : width(w), height(h), values(static_cast<size_t>(w) * h) {}

    std::complex<double>& at(int row, int col) {
        return values[static_cast<size_t>(row) * width + col];
    }
    std::complex<double> at(int row, int col) const {
        return values[static_cast<size_t>(row) * width + col];
    }
};

/// Unnormalized forward 2D DFT of a real grid (DC term = sum of samples).
Spectrum fft2(const Image& g);

/// Inverse of fft2 (normalized by 1/(W*H)). The real part is returned; an
/// imaginary residue above 1e-6 emits a diagnostics warning on stderr.
Image ifft2(const Spectrum& s);

/// Zero-pad a kernel to the target size with its center circularly shifted to
/// index (0,0), then transform. Periodic convolve2d(img, k) equals
/// ifft2(fft2(img) * psf_to_otf(k, ...)).
Spectrum psf_to_otf(const Kernel& k, int target_w, int target_h);

/// Same embedding for an arbitrary odd-sized grid (auxiliary kernel variables).
Spectrum grid_to_otf(const Image& small, int target_w, int target_h);

/// Inverse of the psf_to_otf embedding: extract the rows x cols window around
/// the circularly shifted origin of an image-sized grid.
Image extract_kernel_window(const Image& full, int rows, int cols);

/// Transfer function of a one-sided stencil sum_l coeffs[l] * u(i - l) applied
/// along rows (axis_rows = true) or columns.
Spectrum stencil_otf(const std::vector<double>& coeffs, bool axis_rows,
                     int target_w, int target_h);

/// Minimizer of ||x (*) k - y||^2 + beta ||x - a||^2 + mu1 ||grad x - b||^2
/// under periodic boundary, solved exactly in the Fourier domain.
Image solve_x_closed_form(const Image& y, const Kernel& k, const Image& a,
                          const Image& b_h, const Image& b_v, double beta, double mu1,
                          const Spectrum& grad_h_otf, const Spectrum& grad_v_otf);

/// Same solve with the data-side spectra precomputed (hot path for the
/// half-quadratic loops).
Image solve_x_prefactored(const Spectrum& f_y, const Spectrum& k_otf, const Image& a,
                          const Image& b_h, const Image& b_v, double beta, double mu1,
                          const Spectrum& grad_h_otf, const Spectrum& grad_v_otf);

/// Image-sized minimizer of sum_i ||gx_i (*) k - gy_i||^2 + mu2 ||k - wtc||^2
/// + mu3 ||k - d||^2 before any cropping or projection. d and wtc are
/// kernel-support grids embedded like PSFs.
Image solve_k_image_raw(const Image& gx_h, const Image& gx_v, const Image& gy_h,
                        const Image& gy_v, const Image& d, const Image& wtc,
                        double mu2, double mu3);

/// The kernel-support window of solve_k_image_raw, still unprojected.
Image solve_k_support_raw(const Image& gx_h, const Image& gx_v, const Image& gy_h,
                          const Image& gy_v, const Image& d, const Image& wtc,
                          double mu2, double mu3);

/// Full closed-form kernel update: crop to the support of d, clamp negatives,
/// normalize. Throws DegenerateKernelError when clamping removes all mass.
Kernel solve_k_closed_form(const Image& gx_h, const Image& gx_v, const Image& gy_h,
                           const Image& gy_v, const Image& d, const Image& wtc,
                           double mu2, double mu3);

/// Precomputed data-dependent parts of the kernel solve, reused across the
/// split-Bregman inner iterations.
struct KernelSolveData {
    int width = 0;
    int height = 0;
    std::vector<std::complex<double>> numer;  // sum_i conj(F gx_i) * F gy_i
    std::vector<double> denom;                // sum_i |F gx_i|^2
};

KernelSolveData prefactor_kernel_solve(const Image& gx_h, const Image& gx_v,
                                       const Image& gy_h, const Image& gy_v);

Image solve_k_image_prefactored(const KernelSolveData& data, const Image& d,
                                const Image& wtc, double mu2, double mu3);

}  // namespace fdeblur::spectral

#endif
