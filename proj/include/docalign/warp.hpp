#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "docalign/geometry.hpp"

namespace docalign {

// 8-bit raster, row-major, 1 (grayscale) or 3 (RGB) channels.
struct RasterImage {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y, int c) const {
        return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
    }
    std::uint8_t& at(int x, int y, int c) {
        return pixels[static_cast<std::size_t>((y * width + x) * channels + c)];
    }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

// Binary PGM (P5) / PPM (P6), maxval 255.
RasterImage read_pnm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pnm(const RasterImage& img);

// Inverse mapping: each output pixel samples the input at apply(invert(h), p)
// with bilinear interpolation; out-of-bounds samples are white (255).
RasterImage warp_image(const RasterImage& img, const Homography& h,
                       int out_width, int out_height);

}  // namespace docalign
