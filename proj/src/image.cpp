#include "fdeblur/image.hpp"

#include <algorithm>
#include <cmath>

namespace fdeblur {

Image::Image(int width, int height, double fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw DimensionError("image dimensions must be >= 1");
    data_.assign(static_cast<size_t>(width) * height, fill);
}

Kernel::Kernel(int rows, int cols, double fill) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1 || rows % 2 == 0 || cols % 2 == 0)
        throw DimensionError("kernel dimensions must be odd and positive");
    w_.assign(static_cast<size_t>(rows) * cols, fill);
}

Kernel Kernel::delta(int rows, int cols) {
    Kernel k(rows, cols);
    k.at(rows / 2, cols / 2) = 1.0;
    return k;
}

double Kernel::sum() const {
    double s = 0.0;
    for (double v : w_) s += v;
    return s;
}

void Kernel::clamp_nonnegative() {
    for (double& v : w_) v = std::max(v, 0.0);
}

void Kernel::normalize() {
    double s = sum();
    if (!(s > 1e-300))
        throw DegenerateKernelError("kernel has no mass to normalize");
    for (double& v : w_) v /= s;
}

Image Kernel::as_grid() const {
    Image g(cols_, rows_);
    g.data() = w_;
    return g;
}

Kernel Kernel::from_grid(const Image& grid) {
    Kernel k(grid.height(), grid.width());
    k.weights() = grid.data();
    return k;
}

int resolve_index(int i, int n, BoundaryMode mode) {
    if (i >= 0 && i < n) return i;
    switch (mode) {
        case BoundaryMode::Zero:
            return -1;
        case BoundaryMode::Periodic: {
            int m = i % n;
            return m < 0 ? m + n : m;
        }
        case BoundaryMode::Reflexive: {
            // half-sample symmetric reflection: -1 -> 0, n -> n-1
            int period = 2 * n;
            int m = i % period;
            if (m < 0) m += period;
            return m < n ? m : period - 1 - m;
        }
    }
    return -1;
}

Image convolve2d(const Image& img, const Kernel& k, BoundaryMode mode) {
    if (k.rows() > img.height() || k.cols() > img.width())
        throw DimensionError("kernel does not fit inside the image");

    const int H = img.height(), W = img.width();
    const int cr = k.center_row(), cc = k.center_col();
    Image out(W, H);
    for (int r = 0; r < H; ++r) {
        for (int c = 0; c < W; ++c) {
            double acc = 0.0;
            for (int kr = 0; kr < k.rows(); ++kr) {
                int sr = resolve_index(r - (kr - cr), H, mode);
                if (sr < 0) continue;
                for (int kc = 0; kc < k.cols(); ++kc) {
                    int sc = resolve_index(c - (kc - cc), W, mode);
                    if (sc < 0) continue;
                    acc += k.at(kr, kc) * img.at(sr, sc);
                }
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

Image resample_bilinear(const Image& img, int new_w, int new_h) {
    if (new_w < 1 || new_h < 1)
        throw DimensionError("resample target must be >= 1 in both dimensions");
    if (new_w == img.width() && new_h == img.height()) return img;

    const int W = img.width(), H = img.height();
    Image out(new_w, new_h);
    const double sx = new_w > 1 ? static_cast<double>(W - 1) / (new_w - 1) : 0.0;
    const double sy = new_h > 1 ? static_cast<double>(H - 1) / (new_h - 1) : 0.0;
    const double x_base = new_w > 1 ? 0.0 : (W - 1) / 2.0;
    const double y_base = new_h > 1 ? 0.0 : (H - 1) / 2.0;

    for (int r = 0; r < new_h; ++r) {
        double fy = y_base + r * sy;
        int y0 = std::min(static_cast<int>(fy), H - 1);
        int y1 = std::min(y0 + 1, H - 1);
        double wy = fy - y0;
        for (int c = 0; c < new_w; ++c) {
            double fx = x_base + c * sx;
            int x0 = std::min(static_cast<int>(fx), W - 1);
            int x1 = std::min(x0 + 1, W - 1);
            double wx = fx - x0;
            out.at(r, c) = (1 - wy) * ((1 - wx) * img.at(y0, x0) + wx * img.at(y0, x1)) +
                           wy * ((1 - wx) * img.at(y1, x0) + wx * img.at(y1, x1));
        }
    }
    return out;
}

namespace {

// Nearest odd integer >= 3; ties resolved toward the smaller candidate.
int nearest_odd(double x) {
    int lo = static_cast<int>(std::floor(x));
    if (lo % 2 == 0) --lo;
    int hi = lo + 2;
    int pick = (x - lo <= hi - x) ? lo : hi;
    return std::max(pick, 3);
}

}  // namespace

std::vector<PyramidLevel> build_pyramid(const Image& img, int kernel_size, double scale) {
    if (kernel_size < 1 || kernel_size % 2 == 0)
        throw DimensionError("pyramid kernel size must be odd and positive");
    if (!(scale > 1.0))
        throw DimensionError("pyramid scale must be > 1");

    std::vector<PyramidLevel> levels;  // built fine-to-coarse, reversed at the end
    double factor = 1.0;
    int prev_size = -1;
    for (int level = 0;; ++level, factor *= scale) {
        int ksize = level == 0 ? kernel_size : nearest_odd(kernel_size / factor);
        int w = std::max(static_cast<int>(std::lround(img.width() / factor)), 1);
        int h = std::max(static_cast<int>(std::lround(img.height() / factor)), 1);
        // A level is only useful if the image comfortably contains the kernel.
        if (level > 0 && (w < 2 * ksize + 1 || h < 2 * ksize + 1)) break;
        if (ksize != prev_size)
            levels.push_back({resample_bilinear(img, w, h), ksize});
        prev_size = ksize;
        if (ksize <= 3) break;
    }
    std::reverse(levels.begin(), levels.end());
    return levels;
}

Kernel resize_kernel(const Kernel& k, int new_rows, int new_cols) {
    if (new_rows < 1 || new_cols < 1 || new_rows % 2 == 0 || new_cols % 2 == 0)
        throw DimensionError("kernel resize targets must be odd and positive");

    Kernel out(new_rows, new_cols);
    const double sr = k.rows() > 1 ? static_cast<double>(new_rows - 1) / (k.rows() - 1) : 0.0;
    const double sc = k.cols() > 1 ? static_cast<double>(new_cols - 1) / (k.cols() - 1) : 0.0;

    // Splat each source weight at its scaled offset from the center; odd sizes
    // keep the center on the integer grid.
    for (int r = 0; r < k.rows(); ++r) {
        double fr = out.center_row() + (r - k.center_row()) * sr;
        int r0 = static_cast<int>(std::floor(fr));
        double wr = fr - r0;
        for (int c = 0; c < k.cols(); ++c) {
            double v = k.at(r, c);
            if (v == 0.0) continue;
            double fc = out.center_col() + (c - k.center_col()) * sc;
            int c0 = static_cast<int>(std::floor(fc));
            double wc = fc - c0;
            const double w00 = (1 - wr) * (1 - wc), w01 = (1 - wr) * wc;
            const double w10 = wr * (1 - wc), w11 = wr * wc;
            auto put = [&](int rr, int cc, double weight) {
                if (weight != 0.0 && rr >= 0 && rr < new_rows && cc >= 0 && cc < new_cols)
                    out.at(rr, cc) += v * weight;
            };
            put(r0, c0, w00);
            put(r0, c0 + 1, w01);
            put(r0 + 1, c0, w10);
            put(r0 + 1, c0 + 1, w11);
        }
    }
    out.clamp_nonnegative();
    out.normalize();  // throws DegenerateKernelError when everything clipped
    return out;
}

}  // namespace fdeblur
