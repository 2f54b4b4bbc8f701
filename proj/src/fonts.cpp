#include "ippg/fonts.hpp"

#include <algorithm>

#include "ippg/error.hpp"

namespace ippg::packager {
namespace {

// Advance widths in 1/1000 em for printable ASCII (0x20..0x7e).
//
// The proportional tables follow the classic Helvetica and Times-Roman
// metrics; Arial is metrically compatible with Helvetica and shares its
// table. Courier is the standard 600/1000 monospace; the built-in Default
// face is a slightly wider monospace so the two remain distinguishable in
// layout arithmetic.
constexpr std::array<int, 95> kHelveticaWidths = {
    278, 278, 355, 556, 556, 889, 667, 191, 333, 333, 389, 584, 278, 333, 278, 278,
    556, 556, 556, 556, 556, 556, 556, 556, 556, 556, 278, 278, 584, 584, 584, 556,
    1015, 667, 667, 722, 722, 667, 611, 778, 722, 278, 500, 667, 556, 833, 722, 778,
    667, 778, 722, 667, 611, 722, 667, 944, 667, 667, 611, 278, 278, 278, 469, 556,
    333, 556, 556, 500, 556, 556, 278, 556, 556, 222, 222, 500, 222, 833, 556, 556,
    556, 556, 333, 500, 278, 556, 500, 722, 500, 500, 500, 334, 260, 334, 584,
};

constexpr std::array<int, 95> kTimesWidths = {
    250, 333, 408, 500, 500, 833, 778, 180, 333, 333, 500, 564, 250, 333, 250, 278,
    500, 500, 500, 500, 500, 500, 500, 500, 500, 500, 278, 278, 564, 564, 564, 444,
    921, 722, 667, 667, 722, 611, 556, 722, 722, 333, 389, 722, 611, 889, 722, 722,
    556, 722, 667, 556, 611, 722, 722, 944, 722, 722, 611, 333, 278, 333, 469, 500,
    333, 444, 500, 444, 500, 444, 333, 500, 500, 278, 278, 500, 278, 778, 500, 500,
    500, 500, 333, 389, 278, 500, 500, 722, 500, 500, 444, 480, 200, 480, 541,
};

constexpr int kCourierWidth = 600;
constexpr int kDefaultWidth = 625;

std::array<int, 95> monospace_table(int width_milliem) {
    std::array<int, 95> t{};
    t.fill(width_milliem);
    return t;
}

// Embedded 5x8 bitmap face, one row string per scanline, '#' = inked.
// Row 7 carries descenders. Shapes are scaled to the glyph box at draw
// time; layout never depends on them, only on the advance tables above.
using GlyphRows = std::array<const char*, 8>;

constexpr std::array<GlyphRows, 95> kGlyphs = {{
    {".....", ".....", ".....", ".....", ".....", ".....", ".....", "....."},  // space
    {"..#..", "..#..", "..#..", "..#..", "..#..", ".....", "..#..", "....."},  // !
    {".#.#.", ".#.#.", ".#.#.", ".....", ".....", ".....", ".....", "....."},  // "
    {".#.#.", ".#.#.", "#####", ".#.#.", "#####", ".#.#.", ".#.#.", "....."},  // #
    {"..#..", ".####", "#.#..", ".###.", "..#.#", "####.", "..#..", "....."},  // $
    {"##...", "##..#", "...#.", "..#..", ".#...", "#..##", "...##", "....."},  // %
    {".##..", "#..#.", "#.#..", ".#...", "#.#.#", "#..#.", ".##.#", "....."},  // &
    {"..#..", "..#..", ".....", ".....", ".....", ".....", ".....", "....."},  // '
    {"...#.", "..#..", ".#...", ".#...", ".#...", "..#..", "...#.", "....."},  // (
    {".#...", "..#..", "...#.", "...#.", "...#.", "..#..", ".#...", "....."},  // )
    {".....", "..#..", "#.#.#", ".###.", "#.#.#", "..#..", ".....", "....."},  // *
    {".....", "..#..", "..#..", "#####", "..#..", "..#..", ".....", "....."},  // +
    {".....", ".....", ".....", ".....", ".....", "..##.", "..#..", ".#..."},  // ,
    {".....", ".....", ".....", "#####", ".....", ".....", ".....", "....."},  // -
    {".....", ".....", ".....", ".....", ".....", ".##..", ".##..", "....."},  // .
    {"....#", "....#", "...#.", "..#..", ".#...", "#....", "#....", "....."},  // /
    {".###.", "#...#", "#..##", "#.#.#", "##..#", "#...#", ".###.", "....."},  // 0
    {"..#..", ".##..", "..#..", "..#..", "..#..", "..#..", ".###.", "....."},  // 1
    {".###.", "#...#", "....#", "...#.", "..#..", ".#...", "#####", "....."},  // 2
    {".###.", "#...#", "....#", "..##.", "....#", "#...#", ".###.", "....."},  // 3
    {"...#.", "..##.", ".#.#.", "#..#.", "#####", "...#.", "...#.", "....."},  // 4
    {"#####", "#....", "####.", "....#", "....#", "#...#", ".###.", "....."},  // 5
    {"..##.", ".#...", "#....", "####.", "#...#", "#...#", ".###.", "....."},  // 6
    {"#####", "....#", "...#.", "..#..", "..#..", "..#..", "..#..", "....."},  // 7
    {".###.", "#...#", "#...#", ".###.", "#...#", "#...#", ".###.", "....."},  // 8
    {".###.", "#...#", "#...#", ".####", "....#", "...#.", ".##..", "....."},  // 9
    {".....", ".##..", ".##..", ".....", ".##..", ".##..", ".....", "....."},  // :
    {".....", ".##..", ".##..", ".....", ".##..", "..#..", ".#...", "....."},  // ;
    {"...#.", "..#..", ".#...", "#....", ".#...", "..#..", "...#.", "....."},  // <
    {".....", ".....", "#####", ".....", "#####", ".....", ".....", "....."},  // =
    {".#...", "..#..", "...#.", "....#", "...#.", "..#..", ".#...", "....."},  // >
    {".###.", "#...#", "....#", "...#.", "..#..", ".....", "..#..", "....."},  // ?
    {".###.", "#...#", "#.###", "#.#.#", "#.###", "#....", ".###.", "....."},  // @
    {".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#", "....."},  // A
    {"####.", "#...#", "#...#", "####.", "#...#", "#...#", "####.", "....."},  // B
    {".###.", "#...#", "#....", "#....", "#....", "#...#", ".###.", "....."},  // C
    {"####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####.", "....."},  // D
    {"#####", "#....", "#....", "####.", "#....", "#....", "#####", "....."},  // E
    {"#####", "#....", "#....", "####.", "#....", "#....", "#....", "....."},  // F
    {".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".###.", "....."},  // G
    {"#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#", "....."},  // H
    {".###.", "..#..", "..#..", "..#..", "..#..", "..#..", ".###.", "....."},  // I
    {"..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##..", "....."},  // J
    {"#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#", "....."},  // K
    {"#....", "#....", "#....", "#....", "#....", "#....", "#####", "....."},  // L
    {"#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#", "....."},  // M
    {"#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#", "#...#", "....."},  // N
    {".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###.", "....."},  // O
    {"####.", "#...#", "#...#", "####.", "#....", "#....", "#....", "....."},  // P
    {".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#", "....."},  // Q
    {"####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#", "....."},  // R
    {".####", "#....", "#....", ".###.", "....#", "....#", "####.", "....."},  // S
    {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#..", "....."},  // T
    {"#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###.", "....."},  // U
    {"#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#..", "....."},  // V
    {"#...#", "#...#", "#...#", "#.#.#", "#.#.#", "##.##", "#...#", "....."},  // W
    {"#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#", "....."},  // X
    {"#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#..", "....."},  // Y
    {"#####", "....#", "...#.", "..#..", ".#...", "#....", "#####", "....."},  // Z
    {".###.", ".#...", ".#...", ".#...", ".#...", ".#...", ".###.", "....."},  // [
    {"#....", "#....", ".#...", "..#..", "...#.", "....#", "....#", "....."},  // backslash
    {".###.", "...#.", "...#.", "...#.", "...#.", "...#.", ".###.", "....."},  // ]
    {"..#..", ".#.#.", "#...#", ".....", ".....", ".....", ".....", "....."},  // ^
    {".....", ".....", ".....", ".....", ".....", ".....", "#####", "....."},  // _
    {".#...", "..#..", ".....", ".....", ".....", ".....", ".....", "....."},  // `
    {".....", ".....", ".###.", "....#", ".####", "#...#", ".####", "....."},  // a
    {"#....", "#....", "####.", "#...#", "#...#", "#...#", "####.", "....."},  // b
    {".....", ".....", ".###.", "#....", "#....", "#...#", ".###.", "....."},  // c
    {"....#", "....#", ".####", "#...#", "#...#", "#...#", ".####", "....."},  // d
    {".....", ".....", ".###.", "#...#", "#####", "#....", ".###.", "....."},  // e
    {"..##.", ".#..#", ".#...", "###..", ".#...", ".#...", ".#...", "....."},  // f
    {".....", ".....", ".####", "#...#", "#...#", ".####", "....#", ".###."},  // g
    {"#....", "#....", "####.", "#...#", "#...#", "#...#", "#...#", "....."},  // h
    {"..#..", ".....", ".##..", "..#..", "..#..", "..#..", ".###.", "....."},  // i
    {"...#.", ".....", "..##.", "...#.", "...#.", "...#.", "#..#.", ".##.."},  // j
    {"#....", "#....", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "....."},  // k
    {".##..", "..#..", "..#..", "..#..", "..#..", "..#..", ".###.", "....."},  // l
    {".....", ".....", "##.#.", "#.#.#", "#.#.#", "#.#.#", "#.#.#", "....."},  // m
    {".....", ".....", "####.", "#...#", "#...#", "#...#", "#...#", "....."},  // n
    {".....", ".....", ".###.", "#...#", "#...#", "#...#", ".###.", "....."},  // o
    {".....", ".....", "####.", "#...#", "#...#", "####.", "#....", "#...."},  // p
    {".....", ".....", ".####", "#...#", "#...#", ".####", "....#", "....#"},  // q
    {".....", ".....", "#.##.", "##..#", "#....", "#....", "#....", "....."},  // r
    {".....", ".....", ".####", "#....", ".###.", "....#", "####.", "....."},  // s
    {".#...", ".#...", "###..", ".#...", ".#...", ".#..#", "..##.", "....."},  // t
    {".....", ".....", "#...#", "#...#", "#...#", "#...#", ".####", "....."},  // u
    {".....", ".....", "#...#", "#...#", "#...#", ".#.#.", "..#..", "....."},  // v
    {".....", ".....", "#...#", "#...#", "#.#.#", "#.#.#", ".#.#.", "....."},  // w
    {".....", ".....", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "....."},  // x
    {".....", ".....", "#...#", "#...#", "#...#", ".####", "....#", ".###."},  // y
    {".....", ".....", "#####", "...#.", "..#..", ".#...", "#####", "....."},  // z
    {"...##", "..#..", "..#..", ".#...", "..#..", "..#..", "...##", "....."},  // {
    {"..#..", "..#..", "..#..", "..#..", "..#..", "..#..", "..#..", "....."},  // |
    {"##...", "..#..", "..#..", "...#.", "..#..", "..#..", "##...", "....."},  // }
    {".....", ".....", ".#...", "#.#.#", "...#.", ".....", ".....", "....."},  // ~
}};

const GlyphRows& glyph_rows(unsigned char c) {
    if (c < FontMetrics::kFirstGlyph || c >= FontMetrics::kFirstGlyph + FontMetrics::kGlyphCount) {
        c = '?';
    }
    return kGlyphs[c - FontMetrics::kFirstGlyph];
}

const std::array<int, 95>& width_table(FontFamily family) {
    static const std::array<int, 95> courier = monospace_table(kCourierWidth);
    static const std::array<int, 95> fallback = monospace_table(kDefaultWidth);
    switch (family) {
        case FontFamily::Arial:
        case FontFamily::Helvetica:
            return kHelveticaWidths;
        case FontFamily::Times:
            return kTimesWidths;
        case FontFamily::Courier:
            return courier;
        case FontFamily::Default:
            return fallback;
    }
    return fallback;
}

class BitmapRasterBackend final : public RasterBackend {
public:
    std::string version() const override { return "bitmap-5x8/1"; }

    FontMetrics metrics(FontFamily family, int size_pt, int dpi) const override {
        return FontMetrics::for_font(family, size_pt, dpi);
    }

    void draw_line(Image& image, int x, int y, std::string_view text,
                   const FontMetrics& metrics, Rgb color) const override {
        int pen = x;
        const int glyph_h = metrics.size_px();
        for (const char ch : text) {
            const auto c = static_cast<unsigned char>(ch);
            const int advance = metrics.advance_px(c);
            const GlyphRows& rows = glyph_rows(c);
            // Leave ~1/5 of the advance as right side bearing.
            const int glyph_w = std::max(1, advance * 4 / 5);
            for (int ty = 0; ty < glyph_h; ++ty) {
                const int py = y + ty;
                if (py < 0 || py >= image.height) continue;
                const char* row = rows[ty * 8 / glyph_h];
                for (int tx = 0; tx < glyph_w; ++tx) {
                    const int px = pen + tx;
                    if (px < 0 || px >= image.width) continue;
                    if (row[tx * 5 / glyph_w] == '#') {
                        image.set(px, py, color);
                    }
                }
            }
            pen += advance;
        }
    }
};

}  // namespace

std::string_view font_name(FontFamily font) {
    switch (font) {
        case FontFamily::Arial: return "Arial";
        case FontFamily::Courier: return "Courier";
        case FontFamily::Helvetica: return "Helvetica";
        case FontFamily::Times: return "Times";
        case FontFamily::Default: return "Default";
    }
    return "Default";
}

std::string_view color_name(TextColor color) {
    switch (color) {
        case TextColor::Black: return "Black";
        case TextColor::DarkBlue: return "DarkBlue";
        case TextColor::DarkGreen: return "DarkGreen";
        case TextColor::DarkRed: return "DarkRed";
        case TextColor::Gray: return "Gray";
    }
    return "Black";
}

FontFamily font_from_name(std::string_view name) {
    for (FontFamily f : {FontFamily::Arial, FontFamily::Courier, FontFamily::Helvetica,
                         FontFamily::Times, FontFamily::Default}) {
        if (name == font_name(f)) return f;
    }
    throw Error(ErrorCode::Parse, "unknown font \"" + std::string(name) +
                                      "\" (Arial, Courier, Helvetica, Times, Default)");
}

TextColor color_from_name(std::string_view name) {
    for (TextColor c : {TextColor::Black, TextColor::DarkBlue, TextColor::DarkGreen,
                        TextColor::DarkRed, TextColor::Gray}) {
        if (name == color_name(c)) return c;
    }
    throw Error(ErrorCode::Parse, "unknown color \"" + std::string(name) +
                                      "\" (Black, DarkBlue, DarkGreen, DarkRed, Gray)");
}

Rgb color_rgb(TextColor color) {
    switch (color) {
        case TextColor::Black: return {0, 0, 0};
        case TextColor::DarkBlue: return {0, 0, 139};
        case TextColor::DarkGreen: return {0, 100, 0};
        case TextColor::DarkRed: return {139, 0, 0};
        case TextColor::Gray: return {128, 128, 128};
    }
    return {0, 0, 0};
}

FontMetrics::FontMetrics(const std::array<int, kGlyphCount>& advances_px, int size_px)
    : advances_px_(advances_px), size_px_(size_px) {
    if (size_px <= 0) {
        throw Error(ErrorCode::InvalidArgument, "glyph size must be positive");
    }
    for (int a : advances_px_) {
        if (a <= 0) throw Error(ErrorCode::InvalidArgument, "glyph advances must be positive");
    }
    line_height_px_ = (size_px_ * 12 + 5) / 10;
}

FontMetrics FontMetrics::for_font(FontFamily family, int size_pt, int dpi) {
    if (size_pt <= 0 || dpi <= 0) {
        throw Error(ErrorCode::InvalidArgument, "size_pt and dpi must be positive");
    }
    const int size_px = std::max<int>(1, (size_pt * dpi + 36) / 72);
    const auto& milliem = width_table(family);
    std::array<int, kGlyphCount> advances{};
    for (int i = 0; i < kGlyphCount; ++i) {
        advances[i] = std::max(1, (milliem[i] * size_px + 500) / 1000);
    }
    return FontMetrics(advances, size_px);
}

FontMetrics FontMetrics::uniform(int advance_px, int size_px) {
    std::array<int, kGlyphCount> advances{};
    advances.fill(advance_px);
    return FontMetrics(advances, size_px);
}

int FontMetrics::advance_px(unsigned char c) const {
    if (c < kFirstGlyph || c >= kFirstGlyph + kGlyphCount) c = '?';
    return advances_px_[c - kFirstGlyph];
}

int FontMetrics::measure(std::string_view text) const {
    int total = 0;
    for (const char c : text) {
        total += advance_px(static_cast<unsigned char>(c));
    }
    return total;
}

int FontMetrics::widest_glyph_px(std::string_view text) const {
    int widest = 0;
    for (const char c : text) {
        widest = std::max(widest, advance_px(static_cast<unsigned char>(c)));
    }
    return widest;
}

const RasterBackend& default_backend() {
    static const BitmapRasterBackend backend;
    return backend;
}

}  // namespace ippg::packager
