#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ippg/fonts.hpp"
#include "ippg/image.hpp"

namespace ippg::packager {

// How the prompt text is rasterized. Defaults match the main-experiment
// rendering: Arial, black on white, 72 dpi.
struct RenderConfig {
    FontFamily font = FontFamily::Arial;
    TextColor color = TextColor::Black;
    int size_pt = 24;
    int dpi = 72;
    int margin_px = 10;
    Rgb background{255, 255, 255};

    void validate() const;  // size_pt > 0, dpi > 0, margin_px >= 0

    // Canonical short form, e.g. "Arial/Black/24"; dpi and margin are echoed
    // separately in metadata.
    std::string id() const;

    bool operator==(const RenderConfig&) const = default;
};

// Inverse of RenderConfig::id(); dpi/margin/background take their defaults.
RenderConfig config_from_id(const std::string& id);

struct TextLayout {
    std::vector<std::string> lines;
    int line_height_px = 0;
    int banner_width_px = 0;
    int banner_height_px = 0;  // lines * line_height + 2 * margin
};

struct PackagedImage {
    Image pixels;
    int banner_height_px = 0;
    int base_height_px = 0;  // 0 for text-only renders
    RenderConfig config;
    std::string text_digest;  // hash of the normalized injected text
    TextLayout layout;
    std::string backend_version;
};

// Collapses runs of spaces/tabs, trims, and keeps explicit newlines as
// forced line breaks (interior blank lines survive; leading/trailing ones
// are dropped). Returns one entry per forced-break segment.
std::vector<std::string> normalize_text(std::string_view text);

// Digest of the normalized text; independent of wrap width and rendering.
std::string text_digest(std::string_view text);

// Greedy word wrap against the given metrics. No returned line measures
// wider than max_line_width_px; words that cannot fit on a line by
// themselves are hard-broken at glyph boundaries.
//
// Throws ErrorCode::EmptyPrompt for empty/whitespace-only text and
// ErrorCode::WidthTooSmall when even a single glyph of the text exceeds
// max_line_width_px.
std::vector<std::string> wrap_text(std::string_view text, int max_line_width_px,
                                   const FontMetrics& metrics);

// Banner over base image: wraps the text to the base width, renders it on a
// minimal-height strip, and places the base image byte-identically below.
// Output width always equals the base width.
PackagedImage package(std::string_view text, const RenderConfig& config, const Image& base,
                      const RasterBackend& backend = default_backend());

// Canvas-width selection for text-only renders. Fixed pins the width; Auto
// walks a width ladder and picks the smallest width whose wrapped line count
// stays within max_lines (falling back to the widest rung).
struct WidthPolicy {
    static WidthPolicy fixed(int width_px);
    static WidthPolicy auto_ladder();
    static WidthPolicy auto_ladder(std::vector<int> widths_px, int max_lines);

    std::optional<int> fixed_width_px;
    std::vector<int> ladder_px;
    int max_lines = 0;
};

// Text rendered on a standalone canvas (base_height_px == 0); same layout
// rules as package at the chosen width.
PackagedImage render_text_only(std::string_view text, const RenderConfig& config,
                               const WidthPolicy& policy = WidthPolicy::auto_ladder(),
                               const RasterBackend& backend = default_backend());

// Writes <path> as PNG plus a structured sidecar record at <path>.json with
// the layout lines, banner geometry, config echo, and text digest.
void write_packaged(const std::filesystem::path& png_path, const PackagedImage& packaged);

}  // namespace ippg::packager
