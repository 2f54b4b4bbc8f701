#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ippg/harness.hpp"
#include "ippg/money.hpp"
#include "ippg/providers.hpp"
#include "ippg/tokenomics.hpp"

namespace ippg::sweeps {

inline constexpr const char* kBaselineConfigId = "baseline";

// One (sample, config, mode) evaluation. config_id is "baseline" for the
// shared baseline trial, otherwise a RenderConfig id like "Arial/Black/16".
struct TrialResult {
    std::string sample_id;
    std::string config_id;
    providers::RequestMode mode = providers::RequestMode::Baseline;
    harness::Verdict verdict = harness::Verdict::Incorrect;
    Money cost;
    tokenomics::TokenCounts tokens;
    std::string error;  // error class when verdict == Errored

    bool correct() const { return verdict == harness::Verdict::Correct; }
    std::string key() const;

    std::string to_json_line() const;
    static TrialResult from_json_line(const std::string& line, const std::string& origin);
};

// Append-only JSON-lines store. Loading tolerates a torn final line (the
// telltale of a mid-write kill) by reporting the byte length of the valid
// prefix; the writer truncates to that prefix before appending, so a resumed
// run reproduces the exact bytes of an uninterrupted one.
struct LoadedStore {
    std::vector<TrialResult> trials;
    std::uintmax_t valid_bytes = 0;
};

LoadedStore load_trial_store(const std::filesystem::path& path);

class TrialStoreWriter {
public:
    // Opens for appending after truncating the file to valid_prefix_bytes.
    TrialStoreWriter(const std::filesystem::path& path, std::uintmax_t valid_prefix_bytes);

    // Persists one trial; flushed before returning.
    void append(const TrialResult& trial);

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace ippg::sweeps
