#include "ippg/providers.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ippg/error.hpp"
#include "nlohmann/json.hpp"

namespace ippg::providers {
namespace {

using tokenomics::PixelLinear;
using tokenomics::TileBased;
using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

int64_t parse_positive_int(const std::string& value, const std::string& key,
                           const std::string& origin) {
    try {
        size_t idx = 0;
        const long long parsed = std::stoll(value, &idx);
        if (idx != value.size() || parsed <= 0) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw Error(ErrorCode::Parse,
                    origin + ": key \"" + key + "\" needs a positive integer, got \"" + value +
                        "\"");
    }
}

}  // namespace

void ProviderProfile::validate() const {
    if (name.empty()) throw Error(ErrorCode::InvalidArgument, "profile name is empty");
    pricing.validate();
    tokenomics::validate(scheme);
    lookup_text_counter(text_counter);
}

ProviderProfile builtin_profile(const std::string& name) {
    ProviderProfile p;
    p.name = name;
    p.pricing = tokenomics::builtin_pricing(name);
    if (name == "claude-3.5-sonnet") {
        p.scheme = PixelLinear{};
    } else {
        p.scheme = TileBased{};
    }
    return p;
}

std::vector<std::string> builtin_profile_names() {
    return tokenomics::builtin_pricing_names();
}

ProviderProfile parse_profile(const std::string& text, const std::string& origin) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::Parse, origin + ":" + std::to_string(line_no) +
                                              ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kv.emplace(key, value).second) {
            throw Error(ErrorCode::Parse, origin + ":" + std::to_string(line_no) +
                                              ": duplicate key \"" + key + "\"");
        }
    }

    auto take = [&](const std::string& key) -> std::string {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            throw Error(ErrorCode::Parse, origin + ": missing key \"" + key + "\"");
        }
        std::string value = it->second;
        kv.erase(it);
        return value;
    };

    ProviderProfile p;
    p.name = take("name");
    p.pricing.input_price = Money::parse(take("input_price"));
    p.pricing.output_price = Money::parse(take("output_price"));
    p.pricing.image_price = Money::parse(take("image_price"));

    const std::string scheme = take("scheme");
    if (scheme == "tile-based") {
        TileBased t;
        t.base_tokens = parse_positive_int(take("tile_base_tokens"), "tile_base_tokens", origin);
        t.tile_tokens = parse_positive_int(take("tile_tokens"), "tile_tokens", origin);
        t.tile_side_px = parse_positive_int(take("tile_side_px"), "tile_side_px", origin);
        p.scheme = t;
    } else if (scheme == "pixel-linear") {
        PixelLinear px;
        px.pixels_per_token =
            parse_positive_int(take("pixels_per_token"), "pixels_per_token", origin);
        p.scheme = px;
    } else {
        throw Error(ErrorCode::Parse,
                    origin + ": scheme must be tile-based or pixel-linear, got \"" + scheme +
                        "\"");
    }

    if (const auto it = kv.find("text_counter"); it != kv.end()) {
        p.text_counter = it->second;
        kv.erase(it);
    }
    if (!kv.empty()) {
        throw Error(ErrorCode::Parse, origin + ": unknown key \"" + kv.begin()->first + "\"");
    }
    p.validate();
    return p;
}

std::string serialize_profile(const ProviderProfile& profile) {
    std::string out;
    out += "name = " + profile.name + "\n";
    out += "input_price = " + profile.pricing.input_price.to_scientific_string() + "\n";
    out += "output_price = " + profile.pricing.output_price.to_scientific_string() + "\n";
    out += "image_price = " + profile.pricing.image_price.to_scientific_string() + "\n";
    out += "scheme = " + tokenomics::scheme_name(profile.scheme) + "\n";
    if (const auto* tile = std::get_if<TileBased>(&profile.scheme)) {
        out += "tile_base_tokens = " + std::to_string(tile->base_tokens) + "\n";
        out += "tile_tokens = " + std::to_string(tile->tile_tokens) + "\n";
        out += "tile_side_px = " + std::to_string(tile->tile_side_px) + "\n";
    } else {
        const auto& px = std::get<PixelLinear>(profile.scheme);
        out += "pixels_per_token = " + std::to_string(px.pixels_per_token) + "\n";
    }
    out += "text_counter = " + profile.text_counter + "\n";
    return out;
}

ProviderProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open profile " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_profile(buf.str(), path.string());
}

void save_profile(const std::filesystem::path& path, const ProviderProfile& profile) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write profile " + path.string());
    out << serialize_profile(profile);
}

ProviderProfile resolve_profile(const std::string& name_or_path) {
    for (const auto& name : builtin_profile_names()) {
        if (name_or_path == name) return builtin_profile(name);
    }
    if (std::filesystem::exists(name_or_path)) {
        return load_profile(name_or_path);
    }
    throw Error(ErrorCode::InvalidArgument,
                "\"" + name_or_path + "\" is neither a built-in profile nor a profile file");
}

std::string_view mode_name(RequestMode mode) {
    return mode == RequestMode::Baseline ? "baseline" : "ippg";
}

RequestMode mode_from_name(std::string_view name) {
    if (name == "baseline") return RequestMode::Baseline;
    if (name == "ippg") return RequestMode::IPPg;
    throw Error(ErrorCode::Parse, "unknown mode \"" + std::string(name) + "\"");
}

PromptRequest build_request(const ProviderProfile& profile, const std::string& system_text,
                            const std::string& user_text, const std::vector<Image>& base_images,
                            RequestMode mode, const packager::RenderConfig& config,
                            const packager::RasterBackend& backend) {
    profile.validate();
    if (user_text.empty() && base_images.empty()) {
        throw Error(ErrorCode::InvalidArgument, "request needs user text or at least one image");
    }

    PromptRequest request;
    request.system_text = system_text;
    request.mode = mode;
    if (mode == RequestMode::Baseline) {
        request.user_text = user_text;
        request.images = base_images;
        return request;
    }

    if (packager::normalize_text(user_text).empty()) {
        throw Error(ErrorCode::EmptyPrompt, "packaging mode needs a non-empty prompt");
    }
    if (base_images.empty()) {
        request.images.push_back(packager::render_text_only(user_text, config,
                                                            packager::WidthPolicy::auto_ladder(),
                                                            backend)
                                     .pixels);
    } else {
        // The banner goes above the first image; any further images pass
        // through untouched.
        request.images.push_back(packager::package(user_text, config, base_images[0], backend)
                                     .pixels);
        for (size_t i = 1; i < base_images.size(); ++i) {
            request.images.push_back(base_images[i]);
        }
    }
    return request;
}

tokenomics::TokenCounts count_request_tokens(const ProviderProfile& profile,
                                             const PromptRequest& request,
                                             int64_t expected_output_tokens) {
    const TextCounter counter = lookup_text_counter(profile.text_counter);

    tokenomics::TokenCounts counts;
    counts.input_text = counter(request.system_text);
    if (request.user_text) counts.input_text += counter(*request.user_text);
    counts.output_text = expected_output_tokens;

    int64_t image_total = 0;
    for (const Image& image : request.images) {
        image_total += tokenomics::image_tokens(profile.scheme, image.width, image.height);
    }
    if (request.mode == RequestMode::Baseline) {
        counts.image_baseline = image_total;
    } else {
        counts.image_ippg = image_total;
    }
    return counts;
}

tokenomics::CostBreakdown estimate_cost(const ProviderProfile& profile,
                                        const PromptRequest& request,
                                        int64_t expected_output_tokens) {
    const tokenomics::TokenCounts counts =
        count_request_tokens(profile, request, expected_output_tokens);
    return request.mode == RequestMode::Baseline ? tokenomics::cost_baseline(profile.pricing, counts)
                                                 : tokenomics::cost_ippg(profile.pricing, counts);
}

uint64_t request_digest(const PromptRequest& request) {
    uint64_t h = fnv1a64(request.system_text.data(), request.system_text.size());
    h = fnv1a64_append(h, request.user_text ? 1 : 0);
    if (request.user_text) {
        h = fnv1a64(request.user_text->data(), request.user_text->size(), h);
    }
    h = fnv1a64_append(h, request.mode == RequestMode::Baseline ? 0 : 1);
    for (const Image& image : request.images) {
        h = fnv1a64_append(h, image_digest(image));
    }
    return h;
}

MockLlmClient::MockLlmClient(ProviderProfile profile, uint64_t seed)
    : profile_(std::move(profile)), seed_(seed) {
    profile_.validate();
}

CompletionResult MockLlmClient::execute(const PromptRequest& request) {
    const uint64_t digest = request_digest(request);
    const uint64_t mix = fnv1a64_append(digest, seed_);

    if (failure_per_mille_ > 0 &&
        mix % 1000 < static_cast<uint64_t>(failure_per_mille_)) {
        throw TransportError("injected mock transport failure");
    }

    CompletionResult result;
    result.latency_ms = 0;

    std::string answer;
    const auto open = request.system_text.find("[[expected:");
    if (open != std::string::npos) {
        const auto close = request.system_text.find("]]", open);
        if (close != std::string::npos) {
            answer = request.system_text.substr(open + 11, close - open - 11);
        }
    }
    const bool hit = !answer.empty() &&
                     (mix >> 10) % 100 < static_cast<uint64_t>(answer_hit_percent_);
    result.text = hit ? answer : "resp-" + hex64(mix);

    Usage usage;
    const tokenomics::TokenCounts counts = count_request_tokens(profile_, request, 0);
    usage.input_text = counts.input_text;
    usage.image = request.mode == RequestMode::Baseline ? counts.image_baseline : counts.image_ippg;
    usage.output_text = 8 + static_cast<int64_t>((mix >> 24) % 57);
    result.reported_usage = usage;
    return result;
}

int RetryPolicy::delay_ms(int attempt) const {
    if (attempt <= 0) return base_delay_ms;
    int64_t delay = base_delay_ms;
    for (int i = 0; i < attempt && delay < max_delay_ms; ++i) delay *= 2;
    return static_cast<int>(std::min<int64_t>(delay, max_delay_ms));
}

bool RetryBudget::try_consume() {
    int current = remaining_.load();
    while (current > 0) {
        if (remaining_.compare_exchange_weak(current, current - 1)) return true;
    }
    return false;
}

TranscriptWriter::TranscriptWriter(const std::filesystem::path& path) : path_(path) {
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw Error(ErrorCode::Io, "cannot open transcript " + path_.string());
}

namespace {

ordered_json transcript_base(const PromptRequest& request) {
    ordered_json rec;
    rec["request_digest"] = hex64(request_digest(request));
    rec["mode"] = std::string(mode_name(request.mode));
    rec["images"] = request.images.size();
    return rec;
}

void append_line(const std::filesystem::path& path, const ordered_json& rec) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw Error(ErrorCode::Io, "cannot append transcript " + path.string());
    out << rec.dump() << "\n";
}

}  // namespace

void TranscriptWriter::record(const PromptRequest& request, const CompletionResult& result) {
    ordered_json rec = transcript_base(request);
    rec["status"] = "ok";
    rec["latency_ms"] = result.latency_ms;
    if (result.reported_usage) {
        rec["usage"] = {{"input_text", result.reported_usage->input_text},
                        {"output_text", result.reported_usage->output_text},
                        {"image", result.reported_usage->image}};
    }
    append_line(path_, rec);
}

void TranscriptWriter::record_error(const PromptRequest& request, const std::string& error) {
    ordered_json rec = transcript_base(request);
    rec["status"] = "error";
    rec["error"] = error;
    append_line(path_, rec);
}

}  // namespace ippg::providers
