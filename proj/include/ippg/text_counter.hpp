#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace ippg::providers {

using TextCounter = std::function<int64_t(std::string_view)>;

// Offline token estimate: ceil(bytes / 4). Deliberately rough; exact
// provider tokenizers can be registered under their own identifier.
inline constexpr const char* kHeuristicCounterId = "heuristic-chars-4";

int64_t heuristic_chars4(std::string_view text);

// Process-wide registry keyed by identifier. Lookup of an unregistered id
// throws ErrorCode::UnknownCounter.
TextCounter lookup_text_counter(const std::string& id);
void register_text_counter(const std::string& id, TextCounter counter);

}  // namespace ippg::providers
