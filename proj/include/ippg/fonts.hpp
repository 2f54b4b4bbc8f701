#pragma once

#include <array>
#include <string>
#include <string_view>

#include "ippg/image.hpp"

namespace ippg::packager {

// The five ablation fonts, in grid-axis order.
enum class FontFamily { Arial, Courier, Helvetica, Times, Default };

// The five ablation colors, in grid-axis order.
enum class TextColor { Black, DarkBlue, DarkGreen, DarkRed, Gray };

std::string_view font_name(FontFamily font);
std::string_view color_name(TextColor color);
FontFamily font_from_name(std::string_view name);   // throws ErrorCode::Parse
TextColor color_from_name(std::string_view name);   // throws ErrorCode::Parse

// Black (0,0,0), DarkBlue (0,0,139), DarkGreen (0,100,0), DarkRed (139,0,0),
// Gray (128,128,128).
Rgb color_rgb(TextColor color);

// Integer glyph-advance table for one (family, size, dpi) combination.
//
// Advances are stored per printable-ASCII glyph in pixels; bytes outside
// 0x20..0x7e measure (and draw) as the replacement glyph '?'. Arial and
// Helvetica share their proportional table (they are metrically compatible);
// Courier and Default are monospace.
class FontMetrics {
public:
    static constexpr int kFirstGlyph = 0x20;
    static constexpr int kGlyphCount = 95;

    FontMetrics(const std::array<int, kGlyphCount>& advances_px, int size_px);

    static FontMetrics for_font(FontFamily family, int size_pt, int dpi);
    // Every glyph the same width; handy for layout tests with known numbers.
    static FontMetrics uniform(int advance_px, int size_px);

    int advance_px(unsigned char c) const;
    int measure(std::string_view text) const;
    int widest_glyph_px(std::string_view text) const;

    int size_px() const { return size_px_; }
    // 1.2x the glyph size, the usual single-spacing default.
    int line_height_px() const { return line_height_px_; }

private:
    std::array<int, kGlyphCount> advances_px_{};
    int size_px_ = 0;
    int line_height_px_ = 0;
};

// Text rasterization seam. Layout code only consumes FontMetrics, so any
// backend that honors its own metrics produces valid banners; the built-in
// one draws a scaled embedded bitmap face and needs no font files.
class RasterBackend {
public:
    virtual ~RasterBackend() = default;

    // Recorded in packaging metadata; part of the determinism contract.
    virtual std::string version() const = 0;

    virtual FontMetrics metrics(FontFamily family, int size_pt, int dpi) const = 0;

    // Draws one already-wrapped line with its top-left corner at (x, y).
    virtual void draw_line(Image& image, int x, int y, std::string_view text,
                           const FontMetrics& metrics, Rgb color) const = 0;
};

const RasterBackend& default_backend();

}  // namespace ippg::packager
