#ifndef FDEBLUR_IMAGE_HPP
#define FDEBLUR_IMAGE_HPP

#include <vector>

#include "fdeblur/errors.hpp"

namespace fdeblur {

/// How reads outside the grid are resolved.
enum class BoundaryMode { Zero, Periodic, Reflexive };

/// Row-major 2D grid of doubles. Pixel values live in [0,1] at I/O boundaries;
/// intermediate solver states may leave that range.
class Image {
public:
    Image() = default;
    Image(int width, int height, double fill = 0.0);

    int width() const { return width_; }
    int height() const { return height_; }
    long size() const { return static_cast<long>(width_) * height_; }

    double& at(int row, int col) { return data_[static_cast<size_t>(row) * width_ + col]; }
    double at(int row, int col) const { return data_[static_cast<size_t>(row) * width_ + col]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_size(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<double> data_;
};

/// Small odd-sized convolution kernel (point-spread function).
/// After normalize() the weights are a discrete probability mass: >= 0, sum 1.
class Kernel {
public:
    Kernel() = default;
    Kernel(int rows, int cols, double fill = 0.0);

    static Kernel delta(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int center_row() const { return rows_ / 2; }
    int center_col() const { return cols_ / 2; }

    double& at(int row, int col) { return w_[static_cast<size_t>(row) * cols_ + col]; }
    double at(int row, int col) const { return w_[static_cast<size_t>(row) * cols_ + col]; }

    std::vector<double>& weights() { return w_; }
    const std::vector<double>& weights() const { return w_; }

    double sum() const;
    void clamp_nonnegative();
    /// Divides by the weight sum; throws DegenerateKernelError when there is no mass.
    void normalize();

    /// Kernel values copied into an image-typed grid (for framelet/spectral code
    /// that operates on generic 2D grids).
    Image as_grid() const;
    /// Inverse of as_grid(); grid dimensions must be odd.
    static Kernel from_grid(const Image& grid);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> w_;
};

/// Resolve an index against an axis of length n under the given boundary mode.
/// Returns -1 for out-of-range reads in Zero mode (callers substitute 0).
int resolve_index(int i, int n, BoundaryMode mode);

/// True (kernel-flipped) convolution anchored at the kernel center. Output has
/// the input's size; out-of-frame reads follow `mode`.
Image convolve2d(const Image& img, const Kernel& k, BoundaryMode mode);

/// Bilinear resampling with corner-aligned coordinates. A same-size request is
/// an exact copy.
Image resample_bilinear(const Image& img, int new_w, int new_h);

struct PyramidLevel {
    Image image;
    int kernel_size;
};

/// Coarse-to-fine pyramid: per-level kernel sizes follow kernel_size / scale^level
/// rounded to the nearest odd value and floored at 3; the coarsest level comes
/// first. Levels stop at kernel size 3, or earlier when the image would become
/// too small to support the kernel.
std::vector<PyramidLevel> build_pyramid(const Image& img, int kernel_size, double scale);

/// Rescale a kernel to a new odd support. Implemented as mass-preserving
/// bilinear splatting (the adjoint of bilinear sampling) so that a centered
/// delta stays a delta and line kernels keep their axis; negatives are clamped
/// and the result renormalized.
Kernel resize_kernel(const Kernel& k, int new_rows, int new_cols);

}  // namespace fdeblur

#endif
