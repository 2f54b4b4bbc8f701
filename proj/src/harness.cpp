#include "ippg/harness.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "ippg/error.hpp"
#include "nlohmann/json.hpp"

namespace ippg::harness {
namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Canonical decimal form for exact numeric comparison: sign, integer part
// without leading zeros, fraction without trailing zeros. Returns false when
// the text is not a plain decimal number.
bool canonical_decimal(std::string_view raw, std::string& out) {
    std::string s;
    // Strip currency symbols (including multi-byte ones), commas and spaces.
    for (size_t i = 0; i < raw.size();) {
        const unsigned char c = raw[i];
        if (c == '$' || c == ',' || c == ' ' || c == '\t') {
            ++i;
        } else if (raw.compare(i, 3, "\xe2\x82\xac") == 0) {  // euro sign
            i += 3;
        } else if (raw.compare(i, 2, "\xc2\xa3") == 0 || raw.compare(i, 2, "\xc2\xa5") == 0) {
            i += 2;  // pound / yen
        } else {
            s += static_cast<char>(c);
            ++i;
        }
    }

    size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::string int_part, frac_part;
    bool seen_dot = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '.') {
            if (seen_dot) return false;
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            (seen_dot ? frac_part : int_part) += s[i];
        } else {
            return false;
        }
    }
    if (int_part.empty() && frac_part.empty()) return false;

    while (int_part.size() > 1 && int_part.front() == '0') int_part.erase(int_part.begin());
    if (int_part.empty()) int_part = "0";
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();

    const bool is_zero = int_part == "0" && frac_part.empty();
    out = (negative && !is_zero) ? "-" : "";
    out += int_part;
    if (!frac_part.empty()) out += "." + frac_part;
    return true;
}

}  // namespace

std::vector<Sample> load_samples(const std::filesystem::path& path, bool require_ground_truth) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open dataset " + path.string());
    const std::filesystem::path base_dir = path.parent_path();

    std::vector<Sample> samples;
    std::set<std::string> seen_ids;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            throw Error(ErrorCode::Parse, path.string() + ":" + std::to_string(line_no) + ": " +
                                              e.what());
        }

        const auto where = path.string() + ":" + std::to_string(line_no);
        Sample sample;
        try {
            sample.id = record.at("id").get<std::string>();
            sample.system_text = record.value("system_text", std::string());
            sample.user_text = record.value("user_text", std::string());
            sample.ground_truth = record.value("ground_truth", std::string());
            for (const auto& rel : record.value("images", std::vector<std::string>())) {
                std::filesystem::path p(rel);
                sample.base_image_paths.push_back(p.is_absolute() ? p : base_dir / p);
            }
            if (record.contains("metadata")) {
                for (const auto& [key, value] : record.at("metadata").items()) {
                    sample.metadata[key] = value.get<std::string>();
                }
            }
        } catch (const json::exception& e) {
            throw Error(ErrorCode::Parse, where + ": " + e.what());
        }

        if (sample.id.empty()) {
            throw Error(ErrorCode::Parse, where + ": record has an empty id");
        }
        if (!seen_ids.insert(sample.id).second) {
            throw Error(ErrorCode::DuplicateSampleId,
                        where + ": duplicate sample id \"" + sample.id + "\"");
        }
        if (require_ground_truth && sample.ground_truth.empty()) {
            throw Error(ErrorCode::Parse,
                        where + ": record \"" + sample.id + "\" is missing ground_truth");
        }
        for (const auto& image : sample.base_image_paths) {
            if (!std::filesystem::exists(image)) {
                throw Error(ErrorCode::MissingImageFile,
                            where + ": image file not found: " + image.string());
            }
        }
        samples.push_back(std::move(sample));
    }
    return samples;
}

std::string_view verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Correct: return "correct";
        case Verdict::Incorrect: return "incorrect";
        case Verdict::Unparseable: return "unparseable";
        case Verdict::Errored: return "errored";
    }
    return "errored";
}

Verdict verdict_from_name(std::string_view name) {
    if (name == "correct") return Verdict::Correct;
    if (name == "incorrect") return Verdict::Incorrect;
    if (name == "unparseable") return Verdict::Unparseable;
    if (name == "errored") return Verdict::Errored;
    throw Error(ErrorCode::Parse, "unknown verdict \"" + std::string(name) + "\"");
}

JudgeRule JudgeRule::with_delegate(
    std::function<Verdict(std::string_view, std::string_view)> fn) {
    if (!fn) throw Error(ErrorCode::InvalidArgument, "delegate judge needs a function");
    JudgeRule rule;
    rule.kind = Kind::Delegate;
    rule.delegate = std::move(fn);
    return rule;
}

Verdict judge(std::string_view prediction, std::string_view ground_truth, const JudgeRule& rule) {
    switch (rule.kind) {
        case JudgeRule::Kind::ExactMatch:
            return lower(trim(prediction)) == lower(trim(ground_truth)) ? Verdict::Correct
                                                                        : Verdict::Incorrect;
        case JudgeRule::Kind::NormalizedNumeric: {
            std::string lhs, rhs;
            if (!canonical_decimal(prediction, lhs)) return Verdict::Unparseable;
            if (!canonical_decimal(ground_truth, rhs)) return Verdict::Unparseable;
            return lhs == rhs ? Verdict::Correct : Verdict::Incorrect;
        }
        case JudgeRule::Kind::Delegate:
            if (!rule.delegate) {
                throw Error(ErrorCode::InvalidArgument, "delegate judge is not configured");
            }
            return rule.delegate(prediction, ground_truth);
    }
    return Verdict::Errored;
}

}  // namespace ippg::harness
