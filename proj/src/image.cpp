#include "ippg/image.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <memory>

#include "ippg/error.hpp"

namespace ippg {

Image::Image(int w, int h, Rgb fill) : width(w), height(h) {
    if (w < 0 || h < 0) {
        throw Error(ErrorCode::InvalidDimension, "negative image dimensions");
    }
    rgb.resize(static_cast<size_t>(w) * h * 3);
    for (size_t i = 0; i + 2 < rgb.size(); i += 3) {
        rgb[i] = fill.r;
        rgb[i + 1] = fill.g;
        rgb[i + 2] = fill.b;
    }
}

namespace {

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

}  // namespace

Image read_png(const std::filesystem::path& path) {
    FilePtr fp(std::fopen(path.string().c_str(), "rb"));
    if (!fp) {
        throw Error(ErrorCode::Io, "cannot open PNG " + path.string());
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error(ErrorCode::Io, "libpng read init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error(ErrorCode::Io, "libpng info init failed");
    }
    std::vector<png_bytep> rows;
    Image out;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::Io, "failed to decode PNG " + path.string());
    }

    png_init_io(png, fp.get());
    png_read_info(png, info);

    // Normalize everything to 8-bit RGB.
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);

    out.width = static_cast<int>(png_get_image_width(png, info));
    out.height = static_cast<int>(png_get_image_height(png, info));
    const size_t rowbytes = png_get_rowbytes(png, info);
    if (rowbytes != static_cast<size_t>(out.width) * 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw Error(ErrorCode::Io, "unexpected PNG channel layout in " + path.string());
    }
    out.rgb.resize(static_cast<size_t>(out.width) * out.height * 3);
    rows.resize(out.height);
    for (int y = 0; y < out.height; ++y) {
        rows[y] = out.rgb.data() + out.offset(0, y);
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return out;
}

void write_png(const std::filesystem::path& path, const Image& image) {
    if (image.width <= 0 || image.height <= 0) {
        throw Error(ErrorCode::InvalidDimension, "cannot write empty image");
    }
    FilePtr fp(std::fopen(path.string().c_str(), "wb"));
    if (!fp) {
        throw Error(ErrorCode::Io, "cannot create PNG " + path.string());
    }

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw Error(ErrorCode::Io, "libpng write init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error(ErrorCode::Io, "libpng info init failed");
    }
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorCode::Io, "failed to encode PNG " + path.string());
    }

    png_init_io(png, fp.get());
    // Pin the compression settings so identical pixels give identical bytes.
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    rows.resize(image.height);
    for (int y = 0; y < image.height; ++y) {
        rows[y] = const_cast<png_bytep>(image.rgb.data() + image.offset(0, y));
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

uint64_t fnv1a64(const void* data, size_t size, uint64_t seed) {
    const auto* bytes = static_cast<const uint8_t*>(data);
    uint64_t hash = seed;
    for (size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

uint64_t fnv1a64_append(uint64_t hash, uint64_t value) {
    return fnv1a64(&value, sizeof(value), hash);
}

std::string hex64(uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

uint64_t image_digest(const Image& image) {
    uint64_t h = fnv1a64_append(14695981039346656037ull, static_cast<uint64_t>(image.width));
    h = fnv1a64_append(h, static_cast<uint64_t>(image.height));
    return fnv1a64(image.rgb.data(), image.rgb.size(), h);
}

}  // namespace ippg
