#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace ippg {

struct Rgb {
    uint8_t r = 0;
    uint8_t g = 0;
    uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

// Plain interleaved RGB8 raster, row-major, no alpha.
struct Image {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> rgb;  // width * height * 3 bytes

    Image() = default;
    Image(int w, int h, Rgb fill = {255, 255, 255});

    size_t offset(int x, int y) const {
        return (static_cast<size_t>(y) * width + x) * 3;
    }
    void set(int x, int y, Rgb c) {
        const size_t o = offset(x, y);
        rgb[o] = c.r;
        rgb[o + 1] = c.g;
        rgb[o + 2] = c.b;
    }
    Rgb at(int x, int y) const {
        const size_t o = offset(x, y);
        return {rgb[o], rgb[o + 1], rgb[o + 2]};
    }

    bool operator==(const Image&) const = default;
};

// PNG round trip (RGB8, any alpha stripped on read). Throws ErrorCode::Io on
// failure. Writing is deterministic: same pixels, same bytes.
Image read_png(const std::filesystem::path& path);
void write_png(const std::filesystem::path& path, const Image& image);

// FNV-1a, used for content digests and the mock client's deterministic draws.
uint64_t fnv1a64(const void* data, size_t size, uint64_t seed = 14695981039346656037ull);
uint64_t fnv1a64_append(uint64_t hash, uint64_t value);
std::string hex64(uint64_t value);

uint64_t image_digest(const Image& image);

}  // namespace ippg
