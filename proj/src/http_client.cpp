#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "ippg/error.hpp"
#include "ippg/providers.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#include "nlohmann/json.hpp"

namespace ippg::providers {
namespace {

using nlohmann::json;

std::string base64_encode(const std::vector<uint8_t>& data) {
    static const char* tbl = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    size_t i = 0;
    for (; i + 2 < data.size(); i += 3) {
        const uint32_t n = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out += tbl[(n >> 18) & 63];
        out += tbl[(n >> 12) & 63];
        out += tbl[(n >> 6) & 63];
        out += tbl[n & 63];
    }
    if (i + 1 == data.size()) {
        const uint32_t n = data[i] << 16;
        out += tbl[(n >> 18) & 63];
        out += tbl[(n >> 12) & 63];
        out += "==";
    } else if (i + 2 == data.size()) {
        const uint32_t n = (data[i] << 16) | (data[i + 1] << 8);
        out += tbl[(n >> 18) & 63];
        out += tbl[(n >> 12) & 63];
        out += tbl[(n >> 6) & 63];
        out += "=";
    }
    return out;
}

std::string image_data_url(const Image& image) {
    // Round-trip through an in-memory PNG so the wire format matches what
    // the packager writes to disk.
    const auto tmp = std::filesystem::temp_directory_path() /
                     ("ippg-wire-" + hex64(image_digest(image)) + ".png");
    write_png(tmp, image);
    std::ifstream in(tmp, std::ios::binary);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    return "data:image/png;base64," + base64_encode(bytes);
}

json build_chat_body(const std::string& model, const PromptRequest& request) {
    json content = json::array();
    if (request.user_text) {
        content.push_back({{"type", "text"}, {"text", *request.user_text}});
    }
    for (const Image& image : request.images) {
        content.push_back(
            {{"type", "image_url"}, {"image_url", {{"url", image_data_url(image)}}}});
    }
    json body;
    body["model"] = model;
    body["messages"] = json::array();
    if (!request.system_text.empty()) {
        body["messages"].push_back({{"role", "system"}, {"content", request.system_text}});
    }
    body["messages"].push_back({{"role", "user"}, {"content", content}});
    return body;
}

}  // namespace

HttpLlmClient::HttpLlmClient(HttpClientConfig config)
    : config_(std::move(config)), budget_(config_.retry_budget) {
    if (config_.base_url.empty() || config_.model.empty()) {
        throw Error(ErrorCode::InvalidArgument, "http client needs base_url and model");
    }
}

CompletionResult HttpLlmClient::execute(const PromptRequest& request) {
    const char* key = std::getenv(config_.api_key_env.c_str());
    if (!key || !*key) {
        throw ProviderError("credential env var " + config_.api_key_env + " is not set");
    }

    const json body = build_chat_body(config_.model, request);
    const std::string payload = body.dump();

    for (int attempt = 0;; ++attempt) {
        httplib::Client client(config_.base_url);
        client.set_connection_timeout(30);
        client.set_read_timeout(120);
        httplib::Headers headers = {{"Authorization", std::string("Bearer ") + key}};

        const auto started = std::chrono::steady_clock::now();
        auto res = client.Post(config_.path, headers, payload, "application/json");
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();

        if (res && res->status == 200) {
            json reply;
            try {
                reply = json::parse(res->body);
            } catch (const json::exception& e) {
                throw ProviderError(std::string("unparseable provider reply: ") + e.what());
            }
            CompletionResult out;
            out.latency_ms = elapsed;
            out.text = reply.value(json::json_pointer("/choices/0/message/content"),
                                   std::string());
            if (reply.contains("usage")) {
                Usage usage;
                usage.input_text = reply["usage"].value("prompt_tokens", 0);
                usage.output_text = reply["usage"].value("completion_tokens", 0);
                out.reported_usage = usage;
            }
            return out;
        }

        const bool retryable = !res || res->status == 429 || res->status >= 500;
        if (!retryable) {
            throw ProviderError("provider rejected request with status " +
                                std::to_string(res->status));
        }
        if (attempt + 1 >= config_.retry.max_attempts || !budget_.try_consume()) {
            throw TransportError(res ? "transport retries exhausted (status " +
                                           std::to_string(res->status) + ")"
                                     : "transport retries exhausted (no response)");
        }
        std::this_thread::sleep_for(
            std::chrono::milliseconds(config_.retry.delay_ms(attempt)));
    }
}

}  // namespace ippg::providers
