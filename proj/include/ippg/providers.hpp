#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ippg/image.hpp"
#include "ippg/packager.hpp"
#include "ippg/text_counter.hpp"
#include "ippg/tokenomics.hpp"

namespace ippg::providers {

// Pricing plus image-token scheme plus the text counter used for offline
// estimates. Built-ins: gpt-4o and gpt-4.1 are tile-based, claude-3.5-sonnet
// is pixel-linear; prices follow the per-token price table exactly.
struct ProviderProfile {
    std::string name;
    tokenomics::PricingModel pricing;
    tokenomics::TokenScheme scheme;
    std::string text_counter = kHeuristicCounterId;

    void validate() const;

    bool operator==(const ProviderProfile&) const = default;
};

ProviderProfile builtin_profile(const std::string& name);
std::vector<std::string> builtin_profile_names();

// Plain-text key=value profile files; serialize/parse round-trip exactly.
ProviderProfile parse_profile(const std::string& text, const std::string& origin = "<string>");
std::string serialize_profile(const ProviderProfile& profile);
ProviderProfile load_profile(const std::filesystem::path& path);
void save_profile(const std::filesystem::path& path, const ProviderProfile& profile);

// Resolves either a built-in name or a path to a profile file.
ProviderProfile resolve_profile(const std::string& name_or_path);

enum class RequestMode { Baseline, IPPg };

std::string_view mode_name(RequestMode mode);
RequestMode mode_from_name(std::string_view name);

// One assembled request. Baseline keeps the user text and the original
// images; IPPg drops the user text and carries it rendered into the first
// image (or as a standalone text render when the sample has no image).
// The system text is identical across modes.
struct PromptRequest {
    std::string system_text;
    std::optional<std::string> user_text;
    std::vector<Image> images;
    RequestMode mode = RequestMode::Baseline;
};

struct Usage {
    int64_t input_text = 0;
    int64_t output_text = 0;
    int64_t image = 0;
};

struct CompletionResult {
    std::string text;
    std::optional<Usage> reported_usage;
    int64_t latency_ms = 0;
};

PromptRequest build_request(const ProviderProfile& profile, const std::string& system_text,
                            const std::string& user_text, const std::vector<Image>& base_images,
                            RequestMode mode, const packager::RenderConfig& config,
                            const packager::RasterBackend& backend = packager::default_backend());

// Token counts for one request under the profile's counter and scheme: text
// tokens from system + user text, image tokens summed over the images into
// the slot matching the request mode.
tokenomics::TokenCounts count_request_tokens(const ProviderProfile& profile,
                                             const PromptRequest& request,
                                             int64_t expected_output_tokens);

tokenomics::CostBreakdown estimate_cost(const ProviderProfile& profile,
                                        const PromptRequest& request,
                                        int64_t expected_output_tokens);

uint64_t request_digest(const PromptRequest& request);

class LlmClient {
public:
    virtual ~LlmClient() = default;

    // Throws TransportError (retryable) or ProviderError (terminal).
    virtual CompletionResult execute(const PromptRequest& request) = 0;

    virtual int max_in_flight() const { return 1; }
};

// Deterministic stand-in for a live endpoint: the completion is a pure
// function of (request digest, seed) and the usage numbers come from the
// profile's own local estimates.
//
// When the system text carries an "[[expected:...]]" marker the mock answers
// with the marker payload on a digest-derived fraction of requests, so
// sweeps produce non-trivial accuracy without any network.
class MockLlmClient : public LlmClient {
public:
    MockLlmClient(ProviderProfile profile, uint64_t seed);

    // Deterministically fail roughly N in 1000 requests with TransportError.
    void set_failure_per_mille(int per_mille) { failure_per_mille_ = per_mille; }
    // Chance (percent) that a marker-carrying request is answered correctly.
    void set_answer_hit_percent(int percent) { answer_hit_percent_ = percent; }

    CompletionResult execute(const PromptRequest& request) override;
    int max_in_flight() const override { return std::numeric_limits<int>::max(); }

private:
    ProviderProfile profile_;
    uint64_t seed_;
    int failure_per_mille_ = 0;
    int answer_hit_percent_ = 62;
};

// Capped exponential backoff: base * 2^attempt, clamped to cap.
struct RetryPolicy {
    int max_attempts = 3;
    int base_delay_ms = 250;
    int max_delay_ms = 4000;

    int delay_ms(int attempt) const;
};

// Per-sweep retry allowance shared across a client's requests.
class RetryBudget {
public:
    explicit RetryBudget(int total_retries) : remaining_(total_retries) {}
    bool try_consume();

private:
    std::atomic<int> remaining_;
};

// Minimal OpenAI-style chat-completions client over HTTPS. Credentials come
// from the named environment variable and are never logged or serialized.
// Kept out of every test path; sweeps use MockLlmClient.
struct HttpClientConfig {
    std::string base_url;    // e.g. "https://api.openai.com"
    std::string path = "/v1/chat/completions";
    std::string model;
    std::string api_key_env = "IPPG_API_KEY";
    int max_in_flight = 4;
    RetryPolicy retry;
    int retry_budget = 32;
};

class HttpLlmClient : public LlmClient {
public:
    explicit HttpLlmClient(HttpClientConfig config);

    CompletionResult execute(const PromptRequest& request) override;
    int max_in_flight() const override { return config_.max_in_flight; }

private:
    HttpClientConfig config_;
    RetryBudget budget_;
};

// Audit trail: one line-delimited record per executed request.
class TranscriptWriter {
public:
    explicit TranscriptWriter(const std::filesystem::path& path);

    void record(const PromptRequest& request, const CompletionResult& result);
    void record_error(const PromptRequest& request, const std::string& error);

private:
    std::filesystem::path path_;
};

}  // namespace ippg::providers
