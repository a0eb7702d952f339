// Locale-free date/time parsing and rendering for the timing-field detector.
// Patterns use a strftime-like component syntax: %a %d %b %Y %m %H %M %S %s.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace honeyiot {

// Built-in detection patterns, tried in order (RFC-1123 first, then ISO-8601
// variants, epoch seconds, bare time of day). Extra patterns may be appended.
const std::vector<std::string>& builtin_time_patterns();

// Returns epoch milliseconds on success. Epoch-second patterns ("%s") only
// accept values in [2000-01-01, 2100-01-01) to avoid swallowing counters.
std::optional<int64_t> parse_time(std::string_view text, const std::string& pattern);

// First pattern (from `patterns`) that parses `text`; nullopt if none.
struct ParsedTime {
  int64_t epoch_ms = 0;
  std::string pattern;
};
std::optional<ParsedTime> detect_time(std::string_view text,
                                      const std::vector<std::string>& patterns);

std::string render_time(int64_t epoch_ms, const std::string& pattern);

}  // namespace honeyiot
