#include "ippg/text_counter.hpp"

#include <map>
#include <mutex>

#include "ippg/error.hpp"

namespace ippg::providers {
namespace {

std::mutex g_registry_mutex;

std::map<std::string, TextCounter>& registry() {
    static std::map<std::string, TextCounter> counters = {
        {kHeuristicCounterId, heuristic_chars4},
    };
    return counters;
}

}  // namespace

int64_t heuristic_chars4(std::string_view text) {
    return (static_cast<int64_t>(text.size()) + 3) / 4;
}

TextCounter lookup_text_counter(const std::string& id) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto& counters = registry();
    const auto it = counters.find(id);
    if (it == counters.end()) {
        std::string known;
        for (const auto& [name, fn] : counters) {
            if (!known.empty()) known += ", ";
            known += name;
        }
        throw Error(ErrorCode::UnknownCounter,
                    "text counter \"" + id + "\" is not registered (known: " + known + ")");
    }
    return it->second;
}

void register_text_counter(const std::string& id, TextCounter counter) {
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    registry()[id] = std::move(counter);
}

}  // namespace ippg::providers
