#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "ippg/money.hpp"

namespace ippg::tokenomics {

// Per-token prices for one provider. The three built-in profiles all price
// an image token exactly like an input text token; the shortcut break-even
// test and the savings formula rely on that assumption and fall back to a
// direct cost comparison when a custom pricing violates it.
struct PricingModel {
    Money input_price;   // USD per input text token
    Money output_price;  // USD per output text token
    Money image_price;   // USD per image token

    bool image_matches_input() const { return image_price == input_price; }
    void validate() const;  // all prices >= 0

    bool operator==(const PricingModel&) const = default;
};

// Image-token formulas.
//
// TileBased:   tokens = base + tile * ceil(W/side) * ceil(H/side)
// PixelLinear: tokens = ceil(W*H / pixels_per_token)
//
// The pixel-linear formula is a real number in its source form; we take the
// ceiling so estimates never under-count.
struct TileBased {
    int64_t base_tokens = 85;
    int64_t tile_tokens = 170;
    int64_t tile_side_px = 512;

    bool operator==(const TileBased&) const = default;
};

struct PixelLinear {
    int64_t pixels_per_token = 750;

    bool operator==(const PixelLinear&) const = default;
};

using TokenScheme = std::variant<TileBased, PixelLinear>;

void validate(const TokenScheme& scheme);  // all constants strictly positive
std::string scheme_name(const TokenScheme& scheme);  // "tile-based" | "pixel-linear"

// Token tallies for one (sample, mode) comparison. image_baseline counts the
// original image(s) alone; image_ippg counts the image(s) with the prompt
// banner embedded.
struct TokenCounts {
    int64_t input_text = 0;      // n_i
    int64_t output_text = 0;     // n_o
    int64_t image_baseline = 0;  // n_img for the bare image(s)
    int64_t image_ippg = 0;      // n_img for the packaged image(s)

    void validate() const;  // all counts >= 0

    bool operator==(const TokenCounts&) const = default;
};

struct CostBreakdown {
    Money input_text_cost;
    Money image_cost;
    Money output_cost;
    Money total;  // always the exact sum of the three components

    static CostBreakdown of(Money input_text_cost, Money image_cost, Money output_cost);
};

// Image tokens for one W x H raster under the given scheme.
// Throws ErrorCode::InvalidDimension unless width >= 1 and height >= 1.
int64_t image_tokens(const TokenScheme& scheme, int64_t width_px, int64_t height_px);

// Cost of the conventional request: text prompt plus original image(s).
// input = p_i * n_i, image = p_img * n_img_baseline, output = p_o * n_o.
CostBreakdown cost_baseline(const PricingModel& pricing, const TokenCounts& counts);

// Cost of the packaged request: prompt pixels ride the image channel, so the
// input-text component is zero by construction.
CostBreakdown cost_ippg(const PricingModel& pricing, const TokenCounts& counts);

// Extra image tokens caused by embedding the prompt; may be negative.
int64_t delta_image_tokens(const TokenCounts& counts);

struct BreakEven {
    bool strictly_cheaper = false;
    // True when pricing has image_price != input_price and the decision came
    // from a direct cost comparison rather than the delta < n_i shortcut.
    bool general_form = false;
};

// Packaging is strictly cheaper iff delta_image_tokens < input_text, provided
// image and input tokens share a price. Otherwise compares totals directly
// and flags the result as general-form.
BreakEven ippg_strictly_cheaper(const PricingModel& pricing, const TokenCounts& counts);

// Per-query savings, exactly cost_baseline.total - cost_ippg.total.
// Under image_price == input_price this equals p_i * (n_i - delta).
Money savings(const PricingModel& pricing, const TokenCounts& counts);

// 100 * (baseline - ippg) / baseline; negative when packaging costs more.
// Throws ErrorCode::UndefinedPercentage when baseline_cost <= 0.
double savings_pct(Money baseline_cost, Money ippg_cost);

// Built-in pricing straight from the per-token price table:
//   gpt-4o             2.5e-6 / 1.0e-5 / 2.5e-6
//   gpt-4.1            2.0e-6 / 8.0e-6 / 2.0e-6
//   claude-3.5-sonnet  3.0e-6 / 1.5e-5 / 3.0e-6
PricingModel builtin_pricing(const std::string& name);
std::vector<std::string> builtin_pricing_names();

// Reads the pricing subset (input_price / output_price / image_price keys) of
// a plain-text key=value profile file.
PricingModel load_pricing(const std::filesystem::path& path);

}  // namespace ippg::tokenomics
