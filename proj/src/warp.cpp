#include "docalign/warp.hpp"

#include <cmath>
#include <string>

#include "docalign/errors.hpp"

namespace docalign {

namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::span<const std::uint8_t> bytes, std::size_t* pos) {
    std::size_t i = *pos;
    while (i < bytes.size()) {
        if (is_pnm_space(bytes[i])) {
            ++i;
        } else if (bytes[i] == '#') {
            while (i < bytes.size() && bytes[i] != '\n') ++i;
        } else {
            break;
        }
    }
    const std::size_t start = i;
    while (i < bytes.size() && !is_pnm_space(bytes[i]) && bytes[i] != '#') ++i;
    *pos = i;
    if (start == i) throw FormatError("truncated PNM header");
    return std::string(reinterpret_cast<const char*>(bytes.data()) + start,
                       i - start);
}

int header_int(std::span<const std::uint8_t> bytes, std::size_t* pos,
               const char* what) {
    const std::string tok = next_token(bytes, pos);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw FormatError(std::string("bad PNM ") + what + " '" + tok + "'");
    }
}

}  // namespace

RasterImage read_pnm(std::span<const std::uint8_t> bytes) {
    std::size_t pos = 0;
    const std::string magic = next_token(bytes, &pos);
    int channels = 0;
    if (magic == "P5") channels = 1;
    else if (magic == "P6") channels = 3;
    else throw FormatError("unsupported PNM magic '" + magic + "'");

    RasterImage img;
    img.channels = channels;
    img.width = header_int(bytes, &pos, "width");
    img.height = header_int(bytes, &pos, "height");
    const int maxval = header_int(bytes, &pos, "maxval");
    if (img.width <= 0 || img.height <= 0) {
        throw FormatError("PNM dimensions must be positive");
    }
    if (maxval != 255) {
        throw FormatError("unsupported PNM maxval " + std::to_string(maxval) +
                          ", only 255 is supported");
    }
    if (pos >= bytes.size() || !is_pnm_space(bytes[pos])) {
        throw FormatError("missing whitespace before PNM raster");
    }
    ++pos;  // exactly one whitespace byte separates header and raster

    const std::size_t expected = static_cast<std::size_t>(img.width) *
                                 static_cast<std::size_t>(img.height) *
                                 static_cast<std::size_t>(channels);
    if (bytes.size() - pos != expected) {
        throw FormatError("PNM raster size mismatch: expected " +
                          std::to_string(expected) + " bytes, got " +
                          std::to_string(bytes.size() - pos));
    }
    img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                      bytes.end());
    return img;
}

std::vector<std::uint8_t> write_pnm(const RasterImage& img) {
    if (img.channels != 1 && img.channels != 3) {
        throw FormatError("PNM supports 1 or 3 channels, got " +
                          std::to_string(img.channels));
    }
    if (img.pixels.size() != static_cast<std::size_t>(img.width) *
                                 static_cast<std::size_t>(img.height) *
                                 static_cast<std::size_t>(img.channels)) {
        throw FormatError("pixel buffer size does not match dimensions");
    }
    const std::string header = std::string(img.channels == 1 ? "P5" : "P6") +
                               "\n" + std::to_string(img.width) + " " +
                               std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels.begin(), img.pixels.end());
    return out;
}

RasterImage warp_image(const RasterImage& img, const Homography& h,
                       int out_width, int out_height) {
    const Homography hinv = invert(h);  // throws SingularMatrixError
    const Eigen::Matrix3d& m = hinv.matrix();

    RasterImage out;
    out.width = out_width;
    out.height = out_height;
    out.channels = img.channels;
    out.pixels.assign(static_cast<std::size_t>(out_width) *
                          static_cast<std::size_t>(out_height) *
                          static_cast<std::size_t>(img.channels),
                      255);  // document-white background

    for (int v = 0; v < out_height; ++v) {
        for (int u = 0; u < out_width; ++u) {
            const double w = m(2, 0) * u + m(2, 1) * v + m(2, 2);
            if (std::abs(w) <= 1e-12) continue;
            const double x = (m(0, 0) * u + m(0, 1) * v + m(0, 2)) / w;
            const double y = (m(1, 0) * u + m(1, 1) * v + m(1, 2)) / w;
            if (x < 0.0 || y < 0.0 || x > img.width - 1 || y > img.height - 1) {
                continue;
            }
            const int x0 = static_cast<int>(x);
            const int y0 = static_cast<int>(y);
            const int x1 = std::min(x0 + 1, img.width - 1);
            const int y1 = std::min(y0 + 1, img.height - 1);
            const double fx = x - x0;
            const double fy = y - y0;
            for (int c = 0; c < img.channels; ++c) {
                const double top = (1.0 - fx) * img.at(x0, y0, c) +
                                   fx * img.at(x1, y0, c);
                const double bottom = (1.0 - fx) * img.at(x0, y1, c) +
                                      fx * img.at(x1, y1, c);
                const double value = (1.0 - fy) * top + fy * bottom;
                out.at(u, v, c) =
                    static_cast<std::uint8_t>(std::lround(value));
            }
        }
    }
    return out;
}

}  // namespace docalign
