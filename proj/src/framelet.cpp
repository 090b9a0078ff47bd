#include "fdeblur/framelet.hpp"

#include <cmath>

namespace fdeblur::framelet {

const FilterBank& piecewise_linear_bank() {
    static const double s = std::sqrt(2.0) / 4.0;
    static const FilterBank bank{{{{0.25, 0.5, 0.25}, {s, 0.0, -s}, {-0.25, 0.5, -0.25}}}};
    return bank;
}

std::complex<double> filter_response(const std::array<double, 3>& filter, double omega) {
    std::complex<double> h = 0.0;
    for (int t = -1; t <= 1; ++t)
        h += filter[t + 1] * std::exp(std::complex<double>(0.0, -omega * t));
    return h;
}

namespace {

inline int wrap(int i, int n) {
    if (i < 0) return i + n;
    if (i >= n) return i - n;
    return i;
}

// Correlation with a centered 3-tap filter along rows or columns, periodic.
Image correlate(const Image& g, const std::array<double, 3>& f, bool along_rows) {
    const int W = g.width(), H = g.height();
    Image out(W, H);
    for (int r = 0; r < H; ++r) {
        for (int c = 0; c < W; ++c) {
            double acc = 0.0;
            for (int t = -1; t <= 1; ++t) {
                int rr = along_rows ? wrap(r + t, H) : r;
                int cc = along_rows ? c : wrap(c + t, W);
                acc += f[t + 1] * g.at(rr, cc);
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

// Adjoint of correlate: convolution with the same centered filter.
Image convolve(const Image& g, const std::array<double, 3>& f, bool along_rows) {
    const int W = g.width(), H = g.height();
    Image out(W, H);
    for (int r = 0; r < H; ++r) {
        for (int c = 0; c < W; ++c) {
            double acc = 0.0;
            for (int t = -1; t <= 1; ++t) {
                int rr = along_rows ? wrap(r - t, H) : r;
                int cc = along_rows ? c : wrap(c - t, W);
                acc += f[t + 1] * g.at(rr, cc);
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

}  // namespace

FrameletCoeffs analyze(const Image& g) {
    const FilterBank& bank = piecewise_linear_bank();
    FrameletCoeffs coeffs;
    coeffs.width = g.width();
    coeffs.height = g.height();

    std::array<Image, 3> row_filtered;
    for (int i = 0; i < 3; ++i) row_filtered[i] = correlate(g, bank.filters[i], true);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            coeffs.band(i, j) = correlate(row_filtered[i], bank.filters[j], false);
    return coeffs;
}

Image synthesize(const FrameletCoeffs& coeffs) {
    const FilterBank& bank = piecewise_linear_bank();
    Image out(coeffs.width, coeffs.height, 0.0);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Image& band = coeffs.band(i, j);
            if (band.width() != coeffs.width || band.height() != coeffs.height)
                throw DimensionError("framelet subbands must share one size");
            Image back = convolve(convolve(band, bank.filters[j], false), bank.filters[i], true);
            for (long n = 0; n < out.size(); ++n) out.data()[n] += back.data()[n];
        }
    }
    return out;
}

}  // namespace fdeblur::framelet
