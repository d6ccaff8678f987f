#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mfd/tensor.hpp"

namespace mfd {

/// Interleaved 8-bit RGB image.
struct ImageU8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // height * width * 3

    std::uint8_t* at(int x, int y) { return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3; }
    const std::uint8_t* at(int x, int y) const {
        return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
};

void write_png(const std::string& path, const ImageU8& img);
ImageU8 read_png(const std::string& path);

/// Decoder seam: formats beyond PNG plug in by extension (lower-case, without
/// the dot). PNG is registered at startup.
using ImageDecoder = std::function<ImageU8(const std::string& path)>;
void register_image_decoder(const std::string& extension, ImageDecoder decoder);
ImageU8 load_image(const std::string& path);

/// Plain bilinear resize of raw pixels (data path, not a tensor op).
ImageU8 resize_image(const ImageU8& img, int out_w, int out_h);

/// (1,3,H,W) tensor with values in [-0.5, 0.5].
TensorPtr image_to_tensor(const ImageU8& img);

}  // namespace mfd
