#include "fdeblur/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

namespace fdeblur::spectral {

namespace {

// FFTW's planner is not thread-safe; plans are cached per (W, H, direction)
// under a mutex and created with FFTW_UNALIGNED so they can execute on any
// caller-provided buffer via the new-array interface.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(int width, int height, int sign, std::complex<double>* in,
                 std::complex<double>* out) {
        fftw_plan plan;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_tuple(width, height, sign);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                plan = fftw_plan_dft_2d(height, width,
                                        reinterpret_cast<fftw_complex*>(in),
                                        reinterpret_cast<fftw_complex*>(out), sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }

private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

Spectrum transform(std::vector<std::complex<double>> buf, int width, int height, int sign) {
    Spectrum out(width, height);
    PlanCache::instance().execute(width, height, sign, buf.data(), out.values.data());
    return out;
}

constexpr double kDenomEpsilon = 1e-12;

void warn_imag_residue(double residue, double scale) {
    if (residue > 1e-6 * std::max(scale, 1.0))
        std::fprintf(stderr, "warning: inverse transform dropped imaginary residue %.3e\n",
                     residue);
}

}  // namespace

Spectrum fft2(const Image& g) {
    std::vector<std::complex<double>> buf(g.data().begin(), g.data().end());
    return transform(std::move(buf), g.width(), g.height(), FFTW_FORWARD);
}

Image ifft2(const Spectrum& s) {
    Spectrum t = transform(s.values, s.width, s.height, FFTW_BACKWARD);
    const double norm = 1.0 / (static_cast<double>(s.width) * s.height);
    Image out(s.width, s.height);
    double max_imag = 0.0, max_real = 0.0;
    for (long i = 0; i < out.size(); ++i) {
        double re = t.values[i].real() * norm;
        max_imag = std::max(max_imag, std::abs(t.values[i].imag()) * norm);
        max_real = std::max(max_real, std::abs(re));
        out.data()[i] = re;
    }
    warn_imag_residue(max_imag, max_real);
    return out;
}

Spectrum grid_to_otf(const Image& small, int target_w, int target_h) {
    if (small.width() > target_w || small.height() > target_h)
        throw DimensionError("kernel exceeds the transform target size");
    if (small.width() % 2 == 0 || small.height() % 2 == 0)
        throw DimensionError("kernel grid must be odd-sized for center embedding");

    const int cr = small.height() / 2, cc = small.width() / 2;
    std::vector<std::complex<double>> buf(static_cast<size_t>(target_w) * target_h);
    for (int r = 0; r < small.height(); ++r) {
        int tr = ((r - cr) % target_h + target_h) % target_h;
        for (int c = 0; c < small.width(); ++c) {
            int tc = ((c - cc) % target_w + target_w) % target_w;
            buf[static_cast<size_t>(tr) * target_w + tc] = small.at(r, c);
        }
    }
    return transform(std::move(buf), target_w, target_h, FFTW_FORWARD);
}

Spectrum psf_to_otf(const Kernel& k, int target_w, int target_h) {
    return grid_to_otf(k.as_grid(), target_w, target_h);
}

Image extract_kernel_window(const Image& full, int rows, int cols) {
    if (rows > full.height() || cols > full.width())
        throw DimensionError("kernel window exceeds the grid");
    const int cr = rows / 2, cc = cols / 2;
    Image out(cols, rows);
    for (int r = 0; r < rows; ++r) {
        int fr = ((r - cr) % full.height() + full.height()) % full.height();
        for (int c = 0; c < cols; ++c) {
            int fc = ((c - cc) % full.width() + full.width()) % full.width();
            out.at(r, c) = full.at(fr, fc);
        }
    }
    return out;
}

Spectrum stencil_otf(const std::vector<double>& coeffs, bool axis_rows,
                     int target_w, int target_h) {
    std::vector<std::complex<double>> buf(static_cast<size_t>(target_w) * target_h);
    for (size_t l = 0; l < coeffs.size(); ++l) {
        int r = axis_rows ? static_cast<int>(l % target_h) : 0;
        int c = axis_rows ? 0 : static_cast<int>(l % target_w);
        buf[static_cast<size_t>(r) * target_w + c] += coeffs[l];
    }
    return transform(std::move(buf), target_w, target_h, FFTW_FORWARD);
}

Image solve_x_prefactored(const Spectrum& f_y, const Spectrum& k_otf, const Image& a,
                          const Image& b_h, const Image& b_v, double beta, double mu1,
                          const Spectrum& grad_h_otf, const Spectrum& grad_v_otf) {
    const int W = f_y.width, H = f_y.height;
    const long n = static_cast<long>(W) * H;

    Spectrum f_a = fft2(a);
    Spectrum f_bh = fft2(b_h);
    Spectrum f_bv = fft2(b_v);

    Spectrum ratio(W, H);
    double min_raw_denom = std::numeric_limits<double>::infinity();
    for (long i = 0; i < n; ++i) {
        const auto K = k_otf.values[i];
        const auto Gh = grad_h_otf.values[i];
        const auto Gv = grad_v_otf.values[i];
        std::complex<double> numer = std::conj(K) * f_y.values[i] + beta * f_a.values[i] +
                                     mu1 * (std::conj(Gh) * f_bh.values[i] +
                                            std::conj(Gv) * f_bv.values[i]);
        double denom = std::norm(K) + beta + mu1 * (std::norm(Gh) + std::norm(Gv));
        min_raw_denom = std::min(min_raw_denom, denom);
        ratio.values[i] = numer / (denom + kDenomEpsilon);
    }
    if (min_raw_denom < 1e-15)
        throw SingularityError("latent solve denominator vanishes at some frequency");
    return ifft2(ratio);
}

Image solve_x_closed_form(const Image& y, const Kernel& k, const Image& a,
                          const Image& b_h, const Image& b_v, double beta, double mu1,
                          const Spectrum& grad_h_otf, const Spectrum& grad_v_otf) {
    if (!y.same_size(a) || !y.same_size(b_h) || !y.same_size(b_v))
        throw DimensionError("latent solve inputs must share the image size");
    return solve_x_prefactored(fft2(y), psf_to_otf(k, y.width(), y.height()), a, b_h, b_v,
                               beta, mu1, grad_h_otf, grad_v_otf);
}

KernelSolveData prefactor_kernel_solve(const Image& gx_h, const Image& gx_v,
                                       const Image& gy_h, const Image& gy_v) {
    if (!gx_h.same_size(gx_v) || !gx_h.same_size(gy_h) || !gx_h.same_size(gy_v))
        throw DimensionError("gradient grids must share one size");
    KernelSolveData data;
    data.width = gx_h.width();
    data.height = gx_h.height();
    const long n = gx_h.size();
    data.numer.resize(n);
    data.denom.resize(n);

    Spectrum fxh = fft2(gx_h), fxv = fft2(gx_v);
    Spectrum fyh = fft2(gy_h), fyv = fft2(gy_v);
    for (long i = 0; i < n; ++i) {
        data.numer[i] = std::conj(fxh.values[i]) * fyh.values[i] +
                        std::conj(fxv.values[i]) * fyv.values[i];
        data.denom[i] = std::norm(fxh.values[i]) + std::norm(fxv.values[i]);
    }
    return data;
}

Image solve_k_image_prefactored(const KernelSolveData& data, const Image& d,
                                const Image& wtc, double mu2, double mu3) {
    if (!(mu2 + mu3 > 0.0))
        throw SingularityError("kernel solve requires mu2 + mu3 > 0");
    if (!d.same_size(wtc))
        throw DimensionError("auxiliary kernel grids must share the kernel support");

    const int W = data.width, H = data.height;
    Spectrum f_d = grid_to_otf(d, W, H);
    Spectrum f_wtc = grid_to_otf(wtc, W, H);

    Spectrum ratio(W, H);
    const long n = static_cast<long>(W) * H;
    for (long i = 0; i < n; ++i) {
        std::complex<double> numer =
            data.numer[i] + mu3 * f_d.values[i] + mu2 * f_wtc.values[i];
        double denom = data.denom[i] + mu3 + mu2;
        ratio.values[i] = numer / (denom + kDenomEpsilon);
    }
    return ifft2(ratio);
}

Image solve_k_image_raw(const Image& gx_h, const Image& gx_v, const Image& gy_h,
                        const Image& gy_v, const Image& d, const Image& wtc,
                        double mu2, double mu3) {
    return solve_k_image_prefactored(prefactor_kernel_solve(gx_h, gx_v, gy_h, gy_v), d,
                                     wtc, mu2, mu3);
}

Image solve_k_support_raw(const Image& gx_h, const Image& gx_v, const Image& gy_h,
                          const Image& gy_v, const Image& d, const Image& wtc,
                          double mu2, double mu3) {
    Image full = solve_k_image_raw(gx_h, gx_v, gy_h, gy_v, d, wtc, mu2, mu3);
    return extract_kernel_window(full, d.height(), d.width());
}

Kernel solve_k_closed_form(const Image& gx_h, const Image& gx_v, const Image& gy_h,
                           const Image& gy_v, const Image& d, const Image& wtc,
                           double mu2, double mu3) {
    Image window = solve_k_support_raw(gx_h, gx_v, gy_h, gy_v, d, wtc, mu2, mu3);
    Kernel k = Kernel::from_grid(window);
    k.clamp_nonnegative();
    k.normalize();
    return k;
}

}  // namespace fdeblur::spectral
