#include "fdeblur/pnm_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fdeblur::io {

namespace {

// Next header token, skipping whitespace and '#' comment lines.
std::string next_token(std::istream& in) {
    std::string tok;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {}
            continue;
        }
        if (std::isspace(ch)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(ch));
    }
    return tok;
}

long parse_positive(const std::string& tok, const char* what) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                    [](unsigned char c) { return std::isdigit(c); }))
        throw FormatError(std::string("malformed header: bad ") + what);
    long v = std::stol(tok);
    if (v <= 0) throw FormatError(std::string("malformed header: nonpositive ") + what);
    return v;
}

std::vector<Image> read_planes(std::istream& in, const std::string& path) {
    std::string magic = next_token(in);
    int channels;
    if (magic == "P5")
        channels = 1;
    else if (magic == "P6")
        channels = 3;
    else
        throw FormatError("unsupported format: expected P5 or P6 magic in " + path);

    long w = parse_positive(next_token(in), "width");
    long h = parse_positive(next_token(in), "height");
    long maxval = parse_positive(next_token(in), "maxval");
    if (maxval > 65535) throw FormatError("malformed header: maxval exceeds 65535");
    const int bytes = maxval > 255 ? 2 : 1;

    std::vector<char> payload(static_cast<size_t>(w) * h * channels * bytes);
    in.read(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (in.gcount() != static_cast<std::streamsize>(payload.size()))
        throw FormatError("truncated payload in " + path);

    std::vector<Image> planes(channels, Image(static_cast<int>(w), static_cast<int>(h)));
    const auto* p = reinterpret_cast<const unsigned char*>(payload.data());
    for (long i = 0; i < w * h; ++i)
        for (int ch = 0; ch < channels; ++ch) {
            long raw;
            if (bytes == 2) {
                raw = (static_cast<long>(*p) << 8) | *(p + 1);
                p += 2;
            } else {
                raw = *p++;
            }
            planes[ch].data()[i] = static_cast<double>(raw) / maxval;
        }
    return planes;
}

unsigned char quantize(double v) {
    return static_cast<unsigned char>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    return out;
}

}  // namespace

LoadedImage read_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    return LoadedImage{read_planes(in, path)};
}

void write_image(const std::string& path, const Image& img) {
    auto out = open_out(path);
    out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
    std::vector<unsigned char> bytes(img.size());
    for (long i = 0; i < img.size(); ++i) bytes[i] = quantize(img.data()[i]);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError("failed writing " + path);
}

void write_image_rgb(const std::string& path, const std::vector<Image>& planes) {
    if (planes.size() != 3 || !planes[0].same_size(planes[1]) ||
        !planes[0].same_size(planes[2]))
        throw DimensionError("RGB output needs three equally sized planes");
    auto out = open_out(path);
    const Image& first = planes[0];
    out << "P6\n" << first.width() << " " << first.height() << "\n255\n";
    std::vector<unsigned char> bytes(static_cast<size_t>(first.size()) * 3);
    for (long i = 0; i < first.size(); ++i)
        for (int ch = 0; ch < 3; ++ch) bytes[3 * i + ch] = quantize(planes[ch].data()[i]);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FormatError("failed writing " + path);
}

void write_kernel_image(const std::string& path, const Kernel& k) {
    double peak = *std::max_element(k.weights().begin(), k.weights().end());
    Image img(k.cols(), k.rows());
    for (size_t i = 0; i < k.weights().size(); ++i)
        img.data()[i] = peak > 0.0 ? k.weights()[i] / peak : 0.0;
    write_image(path, img);
}

void write_kernel_text(const std::string& path, const Kernel& k) {
    auto out = open_out(path);
    out << k.rows() << " " << k.cols() << "\n";
    out.precision(17);
    for (int r = 0; r < k.rows(); ++r) {
        for (int c = 0; c < k.cols(); ++c) out << (c ? " " : "") << k.at(r, c);
        out << "\n";
    }
    if (!out) throw FormatError("failed writing " + path);
}

Kernel read_kernel_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    int rows, cols;
    if (!(in >> rows >> cols) || rows < 1 || cols < 1)
        throw FormatError("malformed kernel text header in " + path);
    Kernel k(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (!(in >> k.at(r, c))) throw FormatError("truncated kernel text in " + path);
    return k;
}

}  // namespace fdeblur::io
