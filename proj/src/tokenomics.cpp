#include "ippg/tokenomics.hpp"

#include <fstream>
#include <sstream>

#include "ippg/error.hpp"

namespace ippg::tokenomics {
namespace {

int64_t ceil_div(int64_t a, int64_t b) {
    return (a + b - 1) / b;
}

void require_count(int64_t value, const char* what) {
    if (value < 0) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string(what) + " must be >= 0, got " + std::to_string(value));
    }
}

}  // namespace

void PricingModel::validate() const {
    if (input_price.is_negative() || output_price.is_negative() || image_price.is_negative()) {
        throw Error(ErrorCode::InvalidArgument, "token prices must be >= 0");
    }
}

void validate(const TokenScheme& scheme) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TileBased>) {
                if (s.base_tokens <= 0 || s.tile_tokens <= 0 || s.tile_side_px <= 0) {
                    throw Error(ErrorCode::InvalidArgument,
                                "tile-based scheme constants must be strictly positive");
                }
            } else {
                if (s.pixels_per_token <= 0) {
                    throw Error(ErrorCode::InvalidArgument,
                                "pixels_per_token must be strictly positive");
                }
            }
        },
        scheme);
}

std::string scheme_name(const TokenScheme& scheme) {
    return std::holds_alternative<TileBased>(scheme) ? "tile-based" : "pixel-linear";
}

void TokenCounts::validate() const {
    require_count(input_text, "input_text");
    require_count(output_text, "output_text");
    require_count(image_baseline, "image_baseline");
    require_count(image_ippg, "image_ippg");
}

CostBreakdown CostBreakdown::of(Money input_text_cost, Money image_cost, Money output_cost) {
    CostBreakdown out;
    out.input_text_cost = input_text_cost;
    out.image_cost = image_cost;
    out.output_cost = output_cost;
    out.total = input_text_cost + image_cost + output_cost;
    return out;
}

int64_t image_tokens(const TokenScheme& scheme, int64_t width_px, int64_t height_px) {
    if (width_px < 1 || height_px < 1) {
        throw Error(ErrorCode::InvalidDimension,
                    "image dimensions must be >= 1, got " + std::to_string(width_px) + "x" +
                        std::to_string(height_px));
    }
    validate(scheme);
    return std::visit(
        [&](const auto& s) -> int64_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, TileBased>) {
                const int64_t tiles_w = ceil_div(width_px, s.tile_side_px);
                const int64_t tiles_h = ceil_div(height_px, s.tile_side_px);
                return s.base_tokens + s.tile_tokens * tiles_w * tiles_h;
            } else {
                return ceil_div(width_px * height_px, s.pixels_per_token);
            }
        },
        scheme);
}

CostBreakdown cost_baseline(const PricingModel& pricing, const TokenCounts& counts) {
    pricing.validate();
    counts.validate();
    return CostBreakdown::of(pricing.input_price * counts.input_text,
                             pricing.image_price * counts.image_baseline,
                             pricing.output_price * counts.output_text);
}

CostBreakdown cost_ippg(const PricingModel& pricing, const TokenCounts& counts) {
    pricing.validate();
    counts.validate();
    return CostBreakdown::of(Money(),
                             pricing.image_price * counts.image_ippg,
                             pricing.output_price * counts.output_text);
}

int64_t delta_image_tokens(const TokenCounts& counts) {
    counts.validate();
    return counts.image_ippg - counts.image_baseline;
}

BreakEven ippg_strictly_cheaper(const PricingModel& pricing, const TokenCounts& counts) {
    BreakEven out;
    if (pricing.image_matches_input()) {
        out.strictly_cheaper = delta_image_tokens(counts) < counts.input_text;
    } else {
        out.general_form = true;
        out.strictly_cheaper =
            cost_ippg(pricing, counts).total < cost_baseline(pricing, counts).total;
    }
    return out;
}

Money savings(const PricingModel& pricing, const TokenCounts& counts) {
    // Identical to the closed form p_i * (n_i - delta) whenever
    // image_price == input_price, and correct in the general case too.
    return cost_baseline(pricing, counts).total - cost_ippg(pricing, counts).total;
}

double savings_pct(Money baseline_cost, Money ippg_cost) {
    if (baseline_cost <= Money()) {
        throw Error(ErrorCode::UndefinedPercentage,
                    "savings percentage needs baseline cost > 0, got " +
                        baseline_cost.to_decimal_string());
    }
    const Money diff = baseline_cost - ippg_cost;
    return 100.0 * static_cast<double>(diff.nanos()) / static_cast<double>(baseline_cost.nanos());
}

PricingModel builtin_pricing(const std::string& name) {
    PricingModel p;
    if (name == "gpt-4o") {
        p.input_price = Money::parse("2.5e-6");
        p.output_price = Money::parse("1.0e-5");
    } else if (name == "gpt-4.1") {
        p.input_price = Money::parse("2.0e-6");
        p.output_price = Money::parse("8.0e-6");
    } else if (name == "claude-3.5-sonnet") {
        p.input_price = Money::parse("3.0e-6");
        p.output_price = Money::parse("1.5e-5");
    } else {
        throw Error(ErrorCode::InvalidArgument,
                    "unknown pricing profile \"" + name + "\" (built-ins: gpt-4o, gpt-4.1, " +
                        "claude-3.5-sonnet)");
    }
    p.image_price = p.input_price;
    return p;
}

std::vector<std::string> builtin_pricing_names() {
    return {"gpt-4o", "gpt-4.1", "claude-3.5-sonnet"};
}

PricingModel load_pricing(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open pricing file " + path.string());
    }
    PricingModel p;
    bool saw_input = false, saw_output = false, saw_image = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "input_price") {
            p.input_price = Money::parse(value);
            saw_input = true;
        } else if (key == "output_price") {
            p.output_price = Money::parse(value);
            saw_output = true;
        } else if (key == "image_price") {
            p.image_price = Money::parse(value);
            saw_image = true;
        }
    }
    if (!saw_input || !saw_output) {
        throw Error(ErrorCode::Parse,
                    path.string() + ": pricing file needs input_price and output_price");
    }
    if (!saw_image) p.image_price = p.input_price;
    p.validate();
    return p;
}

}  // namespace ippg::tokenomics
