#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ippg::harness {

// One evaluation unit from a line-delimited dataset. Image paths are stored
// resolved against the dataset file's directory. Metadata carries the slice
// tags (e.g. question_type, language).
struct Sample {
    std::string id;
    std::string system_text;
    std::string user_text;
    std::vector<std::filesystem::path> base_image_paths;
    std::string ground_truth;
    std::map<std::string, std::string> metadata;
};

// Reads a JSON-lines dataset: one object per line with fields id,
// system_text, user_text, ground_truth, images (relative paths), metadata.
// Rejects duplicate ids, missing image files, and (for judged tasks) records
// without a ground truth; parse failures report the line number.
std::vector<Sample> load_samples(const std::filesystem::path& path,
                                 bool require_ground_truth = true);

// Every trial lands in exactly one of these.
enum class Verdict { Correct, Incorrect, Unparseable, Errored };

std::string_view verdict_name(Verdict verdict);
Verdict verdict_from_name(std::string_view name);

// ExactMatch: trimmed, case-insensitive string equality.
// NormalizedNumeric: strips currency symbols/commas, parses both sides as
// decimals and compares the values exactly; a side that does not parse
// yields Unparseable (tracked separately from Incorrect).
// Delegate: defers to an injected function (e.g. an external judge).
struct JudgeRule {
    enum class Kind { ExactMatch, NormalizedNumeric, Delegate };

    Kind kind = Kind::ExactMatch;
    std::function<Verdict(std::string_view prediction, std::string_view truth)> delegate;

    static JudgeRule exact_match() { return {Kind::ExactMatch, nullptr}; }
    static JudgeRule normalized_numeric() { return {Kind::NormalizedNumeric, nullptr}; }
    static JudgeRule with_delegate(
        std::function<Verdict(std::string_view, std::string_view)> fn);
};

Verdict judge(std::string_view prediction, std::string_view ground_truth, const JudgeRule& rule);

}  // namespace ippg::harness
