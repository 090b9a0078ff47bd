#ifndef FDEBLUR_PNM_IO_HPP
#define FDEBLUR_PNM_IO_HPP

#include <string>
#include <vector>

#include "fdeblur/image.hpp"

namespace fdeblur::io {

/// Grayscale (one plane) or RGB (three planes) decoded image.
struct LoadedImage {
    std::vector<Image> planes;

    bool color() const { return planes.size() == 3; }
    const Image& gray() const { return planes.front(); }
};

/// Reads binary PGM (P5) or PPM (P6). Samples are scaled by 1/maxval; both
/// 8-bit and 16-bit (big-endian) payloads are accepted. Throws FormatError
/// with a distinct message for unsupported magic, malformed headers and
/// truncated payloads.
LoadedImage read_image(const std::string& path);

/// Writes an 8-bit binary PGM (maxval 255); values are clamped to [0,1] and
/// rounded. write->read round-trips quantized data bit-exactly.
void write_image(const std::string& path, const Image& img);

/// Writes an 8-bit binary PPM from three planes.
void write_image_rgb(const std::string& path, const std::vector<Image>& planes);

/// Kernel rendered for visibility: the largest weight maps to 255.
void write_kernel_image(const std::string& path, const Kernel& k);

/// Raw normalized kernel as text: a "rows cols" header line, then one row of
/// full-precision weights per line.
void write_kernel_text(const std::string& path, const Kernel& k);

/// Parses the text format written by write_kernel_text.
Kernel read_kernel_text(const std::string& path);

}  // namespace fdeblur::io

#endif
