#include "fdeblur/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace fdeblur::metrics {

namespace {

constexpr double kPsnrCap = 100.0;
constexpr double kC1 = 0.01 * 0.01;  // (K1 * L)^2 with L = 1
constexpr double kC2 = 0.03 * 0.03;

struct SsimTerms {
    double luminance = 0.0;          // mean of the per-window luminance term
    double contrast_structure = 0.0; // mean of the per-window c*s term
};

std::vector<double> gaussian_window(int size, double sigma) {
    std::vector<double> w(size);
    double sum = 0.0;
    const double c = (size - 1) / 2.0;
    for (int i = 0; i < size; ++i) {
        w[i] = std::exp(-(i - c) * (i - c) / (2.0 * sigma * sigma));
        sum += w[i];
    }
    for (double& v : w) v /= sum;
    return w;
}

// Windowed SSIM statistics over every fully interior window position.
SsimTerms ssim_terms(const Image& a, const Image& b) {
    const int W = a.width(), H = a.height();
    const int win = std::min({11, W, H});
    const double sigma = 1.5 * win / 11.0;
    const auto g = gaussian_window(win, sigma);

    SsimTerms terms;
    long count = 0;
    for (int r = 0; r + win <= H; ++r) {
        for (int c = 0; c + win <= W; ++c) {
            double ma = 0.0, mb = 0.0;
            for (int i = 0; i < win; ++i)
                for (int j = 0; j < win; ++j) {
                    double w = g[i] * g[j];
                    ma += w * a.at(r + i, c + j);
                    mb += w * b.at(r + i, c + j);
                }
            double va = 0.0, vb = 0.0, cov = 0.0;
            for (int i = 0; i < win; ++i)
                for (int j = 0; j < win; ++j) {
                    double w = g[i] * g[j];
                    double da = a.at(r + i, c + j) - ma;
                    double db = b.at(r + i, c + j) - mb;
                    va += w * da * da;
                    vb += w * db * db;
                    cov += w * da * db;
                }
            terms.luminance += (2.0 * ma * mb + kC1) / (ma * ma + mb * mb + kC1);
            terms.contrast_structure += (2.0 * cov + kC2) / (va + vb + kC2);
            ++count;
        }
    }
    terms.luminance /= count;
    terms.contrast_structure /= count;
    return terms;
}

Image downsample2(const Image& src) {
    const int W = std::max(src.width() / 2, 1), H = std::max(src.height() / 2, 1);
    Image out(W, H);
    for (int r = 0; r < H; ++r)
        for (int c = 0; c < W; ++c) {
            int r1 = std::min(2 * r + 1, src.height() - 1);
            int c1 = std::min(2 * c + 1, src.width() - 1);
            out.at(r, c) = 0.25 * (src.at(2 * r, 2 * c) + src.at(2 * r, c1) +
                                   src.at(r1, 2 * c) + src.at(r1, c1));
        }
    return out;
}

void require_same_size(const Image& a, const Image& b) {
    if (!a.same_size(b))
        throw DimensionError("metric inputs must share one size");
}

}  // namespace

double psnr(const Image& a, const Image& b) {
    require_same_size(a, b);
    double mse = 0.0;
    for (long i = 0; i < a.size(); ++i) {
        double d = a.data()[i] - b.data()[i];
        mse += d * d;
    }
    mse /= static_cast<double>(a.size());
    if (mse <= 0.0) return kPsnrCap;
    return std::min(10.0 * std::log10(1.0 / mse), kPsnrCap);
}

double ssim(const Image& a, const Image& b) {
    require_same_size(a, b);
    SsimTerms t = ssim_terms(a, b);
    return t.luminance * t.contrast_structure;
}

double ms_ssim(const Image& a, const Image& b) {
    require_same_size(a, b);
    constexpr int kScales = 5;
    constexpr std::array<double, kScales> kWeights = {0.0448, 0.2856, 0.3001, 0.2363,
                                                      0.1333};
    if (a.width() < (1 << kScales) || a.height() < (1 << kScales))
        throw DimensionError("ms_ssim needs at least 32x32 input for five scales");

    Image sa = a, sb = b;
    double value = 1.0;
    for (int s = 0; s < kScales; ++s) {
        SsimTerms t = ssim_terms(sa, sb);
        double cs = std::max(t.contrast_structure, 0.0);
        if (s == kScales - 1) {
            double lum = std::max(t.luminance, 0.0);
            value *= std::pow(lum * cs, kWeights[s]);
        } else {
            value *= std::pow(cs, kWeights[s]);
            sa = downsample2(sa);
            sb = downsample2(sb);
        }
    }
    return value;
}

double kernel_xcorr(const Kernel& k1, const Kernel& k2) {
    double n1 = 0.0, n2 = 0.0;
    for (double v : k1.weights()) n1 += v * v;
    for (double v : k2.weights()) n2 += v * v;
    if (n1 <= 0.0 || n2 <= 0.0) return 0.0;
    const double denom = std::sqrt(n1) * std::sqrt(n2);

    double best = 0.0;
    for (int dr = -(k2.rows() - 1); dr < k1.rows(); ++dr) {
        for (int dc = -(k2.cols() - 1); dc < k1.cols(); ++dc) {
            double acc = 0.0;
            for (int r = 0; r < k2.rows(); ++r) {
                int r1 = r + dr;
                if (r1 < 0 || r1 >= k1.rows()) continue;
                for (int c = 0; c < k2.cols(); ++c) {
                    int c1 = c + dc;
                    if (c1 < 0 || c1 >= k1.cols()) continue;
                    acc += k1.at(r1, c1) * k2.at(r, c);
                }
            }
            best = std::max(best, acc / denom);
        }
    }
    return std::min(best, 1.0);
}

MetricReport evaluate(const Image& restored, const Image& truth) {
    MetricReport report;
    report.psnr = psnr(restored, truth);
    report.ssim = ssim(restored, truth);
    report.ms_ssim = ms_ssim(restored, truth);
    return report;
}

std::string serialize(const MetricReport& report) {
    char buf[64];
    std::string out;
    auto line = [&](const char* name, double value) {
        std::snprintf(buf, sizeof(buf), "%s=%.6f\n", name, value);
        out += buf;
    };
    line("psnr", report.psnr);
    line("ssim", report.ssim);
    line("ms_ssim", report.ms_ssim);
    if (report.kernel_xcorr) line("kernel_xcorr", *report.kernel_xcorr);
    return out;
}

}  // namespace fdeblur::metrics
