#include "ippg/packager.hpp"

#include <fstream>

#include "ippg/error.hpp"
#include "nlohmann/json.hpp"

namespace ippg::packager {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_words(const std::string& segment) {
    std::vector<std::string> words;
    std::string cur;
    for (const char c : segment) {
        if (c == ' ') {
            if (!cur.empty()) words.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    return words;
}

// Splits an over-wide word at glyph boundaries. All fragments except
// possibly the last fill the line as far as the width allows; the last
// fragment is returned separately so following words can share its line.
void hard_break(const std::string& word, int max_width, const FontMetrics& metrics,
                std::vector<std::string>& out_lines, std::string& carry, int& carry_width) {
    std::string fragment;
    int fragment_width = 0;
    for (const char c : word) {
        const int advance = metrics.advance_px(static_cast<unsigned char>(c));
        if (fragment_width + advance > max_width && !fragment.empty()) {
            out_lines.push_back(fragment);
            fragment.clear();
            fragment_width = 0;
        }
        fragment += c;
        fragment_width += advance;
    }
    carry = fragment;
    carry_width = fragment_width;
}

TextLayout layout_text(std::string_view text, int banner_width_px, const RenderConfig& config,
                       const FontMetrics& metrics) {
    const int text_width = banner_width_px - 2 * config.margin_px;
    if (text_width < 1) {
        throw Error(ErrorCode::WidthTooSmall,
                    "banner width " + std::to_string(banner_width_px) +
                        "px leaves no room inside margins");
    }
    TextLayout layout;
    layout.lines = wrap_text(text, text_width, metrics);
    layout.line_height_px = metrics.line_height_px();
    layout.banner_width_px = banner_width_px;
    layout.banner_height_px =
        static_cast<int>(layout.lines.size()) * layout.line_height_px + 2 * config.margin_px;
    return layout;
}

PackagedImage render_layout(std::string_view text, const RenderConfig& config,
                            const TextLayout& layout, const Image* base,
                            const RasterBackend& backend, const FontMetrics& metrics) {
    const int base_height = base ? base->height : 0;
    PackagedImage out;
    out.config = config;
    out.layout = layout;
    out.banner_height_px = layout.banner_height_px;
    out.base_height_px = base_height;
    out.text_digest = text_digest(text);
    out.backend_version = backend.version();

    out.pixels = Image(layout.banner_width_px, layout.banner_height_px + base_height,
                       config.background);
    const Rgb ink = color_rgb(config.color);
    const int glyph_pad = (metrics.line_height_px() - metrics.size_px()) / 2;
    for (size_t i = 0; i < layout.lines.size(); ++i) {
        const int y = config.margin_px + static_cast<int>(i) * layout.line_height_px + glyph_pad;
        backend.draw_line(out.pixels, config.margin_px, y, layout.lines[i], metrics, ink);
    }
    if (base) {
        std::copy(base->rgb.begin(), base->rgb.end(),
                  out.pixels.rgb.begin() + out.pixels.offset(0, layout.banner_height_px));
    }
    return out;
}

}  // namespace

void RenderConfig::validate() const {
    if (size_pt <= 0) throw Error(ErrorCode::InvalidArgument, "size_pt must be positive");
    if (dpi <= 0) throw Error(ErrorCode::InvalidArgument, "dpi must be positive");
    if (margin_px < 0) throw Error(ErrorCode::InvalidArgument, "margin_px must be >= 0");
}

std::string RenderConfig::id() const {
    return std::string(font_name(font)) + "/" + std::string(color_name(color)) + "/" +
           std::to_string(size_pt);
}

RenderConfig config_from_id(const std::string& id) {
    const auto first = id.find('/');
    const auto second = first == std::string::npos ? std::string::npos : id.find('/', first + 1);
    if (second == std::string::npos) {
        throw Error(ErrorCode::Parse, "config id \"" + id + "\" is not Font/Color/size");
    }
    RenderConfig config;
    config.font = font_from_name(id.substr(0, first));
    config.color = color_from_name(id.substr(first + 1, second - first - 1));
    try {
        size_t idx = 0;
        config.size_pt = std::stoi(id.substr(second + 1), &idx);
        if (idx != id.size() - second - 1) throw std::invalid_argument(id);
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "config id \"" + id + "\" has a bad size field");
    }
    config.validate();
    return config;
}

std::vector<std::string> normalize_text(std::string_view text) {
    std::vector<std::string> segments;
    std::string cur;
    bool pending_space = false;
    auto flush_segment = [&] {
        segments.push_back(cur);
        cur.clear();
        pending_space = false;
    };
    for (const char c : text) {
        if (c == '\n') {
            flush_segment();
        } else if (c == ' ' || c == '\t' || c == '\r') {
            if (!cur.empty()) pending_space = true;
        } else {
            if (pending_space) cur += ' ';
            pending_space = false;
            cur += c;
        }
    }
    flush_segment();
    // Collapse a trailing/leading run of blank segments; interior blank
    // lines are intentional structure and stay.
    while (!segments.empty() && segments.back().empty()) segments.pop_back();
    size_t first = 0;
    while (first < segments.size() && segments[first].empty()) ++first;
    segments.erase(segments.begin(), segments.begin() + first);
    return segments;
}

std::string text_digest(std::string_view text) {
    const auto segments = normalize_text(text);
    uint64_t h = 14695981039346656037ull;
    for (const auto& s : segments) {
        h = fnv1a64(s.data(), s.size(), h);
        h = fnv1a64("\n", 1, h);
    }
    return hex64(h);
}

std::vector<std::string> wrap_text(std::string_view text, int max_line_width_px,
                                   const FontMetrics& metrics) {
    const auto segments = normalize_text(text);
    if (segments.empty()) {
        throw Error(ErrorCode::EmptyPrompt, "prompt text is empty after normalization");
    }
    for (const auto& segment : segments) {
        const int widest = metrics.widest_glyph_px(segment);
        if (widest > max_line_width_px) {
            throw Error(ErrorCode::WidthTooSmall,
                        "line width " + std::to_string(max_line_width_px) +
                            "px cannot fit a " + std::to_string(widest) + "px glyph");
        }
    }

    const int space = metrics.advance_px(' ');
    std::vector<std::string> lines;
    for (const auto& segment : segments) {
        const auto words = split_words(segment);
        if (words.empty()) {
            lines.emplace_back();  // explicit blank line
            continue;
        }
        std::string cur;
        int cur_width = 0;
        for (const auto& word : words) {
            const int word_width = metrics.measure(word);
            if (word_width > max_line_width_px) {
                if (!cur.empty()) {
                    lines.push_back(cur);
                    cur.clear();
                    cur_width = 0;
                }
                hard_break(word, max_line_width_px, metrics, lines, cur, cur_width);
            } else if (cur.empty()) {
                cur = word;
                cur_width = word_width;
            } else if (cur_width + space + word_width <= max_line_width_px) {
                cur += ' ';
                cur += word;
                cur_width += space + word_width;
            } else {
                lines.push_back(cur);
                cur = word;
                cur_width = word_width;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    return lines;
}

PackagedImage package(std::string_view text, const RenderConfig& config, const Image& base,
                      const RasterBackend& backend) {
    config.validate();
    if (base.width < 1 || base.height < 1) {
        throw Error(ErrorCode::InvalidDimension, "base image is empty");
    }
    const FontMetrics metrics = backend.metrics(config.font, config.size_pt, config.dpi);
    const TextLayout layout = layout_text(text, base.width, config, metrics);
    return render_layout(text, config, layout, &base, backend, metrics);
}

WidthPolicy WidthPolicy::fixed(int width_px) {
    WidthPolicy p;
    p.fixed_width_px = width_px;
    return p;
}

WidthPolicy WidthPolicy::auto_ladder() {
    return auto_ladder({512, 640, 768, 1024, 1280, 1536, 2048}, 60);
}

WidthPolicy WidthPolicy::auto_ladder(std::vector<int> widths_px, int max_lines) {
    if (widths_px.empty() || max_lines < 1) {
        throw Error(ErrorCode::InvalidArgument, "width ladder needs rungs and max_lines >= 1");
    }
    std::sort(widths_px.begin(), widths_px.end());
    WidthPolicy p;
    p.ladder_px = std::move(widths_px);
    p.max_lines = max_lines;
    return p;
}

PackagedImage render_text_only(std::string_view text, const RenderConfig& config,
                               const WidthPolicy& policy, const RasterBackend& backend) {
    config.validate();
    const FontMetrics metrics = backend.metrics(config.font, config.size_pt, config.dpi);

    int width = 0;
    if (policy.fixed_width_px) {
        width = *policy.fixed_width_px;
    } else {
        width = policy.ladder_px.back();
        for (const int candidate : policy.ladder_px) {
            const TextLayout trial = layout_text(text, candidate, config, metrics);
            if (static_cast<int>(trial.lines.size()) <= policy.max_lines) {
                width = candidate;
                break;
            }
        }
    }
    const TextLayout layout = layout_text(text, width, config, metrics);
    return render_layout(text, config, layout, nullptr, backend, metrics);
}

void write_packaged(const std::filesystem::path& png_path, const PackagedImage& packaged) {
    write_png(png_path, packaged.pixels);

    ordered_json meta;
    meta["text_digest"] = packaged.text_digest;
    meta["banner_height_px"] = packaged.banner_height_px;
    meta["base_height_px"] = packaged.base_height_px;
    meta["width_px"] = packaged.pixels.width;
    meta["height_px"] = packaged.pixels.height;
    meta["line_height_px"] = packaged.layout.line_height_px;
    meta["lines"] = packaged.layout.lines;
    meta["config"] = {
        {"font", std::string(font_name(packaged.config.font))},
        {"color", std::string(color_name(packaged.config.color))},
        {"size_pt", packaged.config.size_pt},
        {"dpi", packaged.config.dpi},
        {"margin_px", packaged.config.margin_px},
    };
    meta["backend"] = packaged.backend_version;

    std::filesystem::path sidecar = png_path;
    sidecar += ".json";
    std::ofstream out(sidecar, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write sidecar " + sidecar.string());
    }
    out << meta.dump(2) << "\n";
}

}  // namespace ippg::packager
