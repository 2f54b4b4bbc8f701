#include "ippg/trial_store.hpp"

#include "ippg/error.hpp"
#include "nlohmann/json.hpp"

namespace ippg::sweeps {
namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string TrialResult::key() const {
    return sample_id + "|" + config_id + "|" + std::string(providers::mode_name(mode));
}

std::string TrialResult::to_json_line() const {
    ordered_json rec;
    rec["sample_id"] = sample_id;
    rec["config"] = config_id;
    rec["mode"] = std::string(providers::mode_name(mode));
    rec["verdict"] = std::string(harness::verdict_name(verdict));
    rec["correct"] = correct();
    rec["cost_nanousd"] = cost.nanos();
    rec["tokens"] = {{"input_text", tokens.input_text},
                     {"output_text", tokens.output_text},
                     {"image_baseline", tokens.image_baseline},
                     {"image_ippg", tokens.image_ippg}};
    rec["error"] = error;
    return rec.dump();
}

TrialResult TrialResult::from_json_line(const std::string& line, const std::string& origin) {
    ordered_json rec;
    try {
        rec = ordered_json::parse(line);
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorCode::Parse, origin + ": " + e.what());
    }
    try {
        TrialResult t;
        t.sample_id = rec.at("sample_id").get<std::string>();
        t.config_id = rec.at("config").get<std::string>();
        t.mode = providers::mode_from_name(rec.at("mode").get<std::string>());
        t.verdict = harness::verdict_from_name(rec.at("verdict").get<std::string>());
        t.cost = Money::from_nanos(rec.at("cost_nanousd").get<int64_t>());
        const auto& tokens = rec.at("tokens");
        t.tokens.input_text = tokens.at("input_text").get<int64_t>();
        t.tokens.output_text = tokens.at("output_text").get<int64_t>();
        t.tokens.image_baseline = tokens.at("image_baseline").get<int64_t>();
        t.tokens.image_ippg = tokens.at("image_ippg").get<int64_t>();
        t.error = rec.value("error", std::string());
        return t;
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorCode::Parse, origin + ": " + e.what());
    }
}

LoadedStore load_trial_store(const std::filesystem::path& path) {
    LoadedStore out;
    std::ifstream in(path, std::ios::binary);
    if (!in) return out;  // absent store == fresh sweep

    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t pos = 0;
    while (pos < data.size()) {
        const size_t nl = data.find('\n', pos);
        if (nl == std::string::npos) break;  // torn tail: no trailing newline
        const std::string line = data.substr(pos, nl - pos);
        const std::string origin = path.string() + " line " +
                                   std::to_string(out.trials.size() + 1);
        if (!line.empty()) {
            // A line with its newline was fully written; if it does not
            // parse, the store is corrupt rather than torn.
            out.trials.push_back(TrialResult::from_json_line(line, origin));
        }
        pos = nl + 1;
        out.valid_bytes = pos;
    }
    return out;
}

TrialStoreWriter::TrialStoreWriter(const std::filesystem::path& path,
                                   std::uintmax_t valid_prefix_bytes)
    : path_(path) {
    if (std::filesystem::exists(path)) {
        std::error_code ec;
        std::filesystem::resize_file(path, valid_prefix_bytes, ec);
        if (ec) {
            throw Error(ErrorCode::Io,
                        "cannot truncate trial store " + path.string() + ": " + ec.message());
        }
    } else if (!path.parent_path().empty()) {
        std::filesystem::create_directories(path.parent_path());
    }
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) throw Error(ErrorCode::Io, "cannot open trial store " + path.string());
}

void TrialStoreWriter::append(const TrialResult& trial) {
    out_ << trial.to_json_line() << "\n";
    out_.flush();
    if (!out_) throw Error(ErrorCode::Io, "failed writing trial store " + path_.string());
}

}  // namespace ippg::sweeps
