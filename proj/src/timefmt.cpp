#include "honeyiot/util/timefmt.hpp"

#include <array>
#include <cstdio>

namespace honeyiot {

namespace {

const std::array<const char*, 7> kWeekdays = {"Sun", "Mon", "Tue", "Wed",
                                              "Thu", "Fri", "Sat"};
const std::array<const char*, 12> kMonths = {"Jan", "Feb", "Mar", "Apr",
                                             "May", "Jun", "Jul", "Aug",
                                             "Sep", "Oct", "Nov", "Dec"};

// Hinnant's civil calendar conversions (proleptic Gregorian).
int64_t days_from_civil(int64_t y, int m, int d) {
  y -= m <= 2;
  const int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

void civil_from_days(int64_t z, int64_t& y, int& m, int& d) {
  z += 719468;
  const int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y += m <= 2;
}

struct Civil {
  int64_t year = 1970;
  int month = 1;
  int day = 1;
  int hour = 0;
  int minute = 0;
  int second = 0;
};

int64_t to_epoch_s(const Civil& c) {
  return days_from_civil(c.year, c.month, c.day) * 86400 + c.hour * 3600 +
         c.minute * 60 + c.second;
}

Civil from_epoch_s(int64_t s) {
  Civil c;
  int64_t days = s / 86400;
  int64_t rem = s % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  civil_from_days(days, c.year, c.month, c.day);
  c.hour = static_cast<int>(rem / 3600);
  c.minute = static_cast<int>((rem % 3600) / 60);
  c.second = static_cast<int>(rem % 60);
  return c;
}

int weekday_of(int64_t epoch_s) {
  int64_t days = epoch_s / 86400;
  if (epoch_s % 86400 < 0) --days;
  return static_cast<int>(((days % 7) + 11) % 7);  // 1970-01-01 is Thursday
}

constexpr int64_t kEpochMin = 946684800;   // 2000-01-01
constexpr int64_t kEpochMax = 4102444800;  // 2100-01-01

bool match_fixed_int(std::string_view& s, int digits, int& out) {
  if (s.size() < static_cast<size_t>(digits)) return false;
  int v = 0;
  for (int i = 0; i < digits; ++i) {
    char c = s[i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  s.remove_prefix(digits);
  return true;
}

template <size_t N>
bool match_name(std::string_view& s, const std::array<const char*, N>& names, int& idx) {
  for (size_t i = 0; i < N; ++i) {
    std::string_view n = names[i];
    if (s.substr(0, n.size()) == n) {
      idx = static_cast<int>(i);
      s.remove_prefix(n.size());
      return true;
    }
  }
  return false;
}

}  // namespace

const std::vector<std::string>& builtin_time_patterns() {
  static const std::vector<std::string> patterns = {
      "%a, %d %b %Y %H:%M:%S GMT",
      "%a, %d %b %Y %H:%M:%S",
      "%d %b %Y %H:%M:%S",
      "%Y-%m-%dT%H:%M:%SZ",
      "%Y-%m-%dT%H:%M:%S",
      "%Y-%m-%d %H:%M:%S",
      "%s",
      "%H:%M:%S",
  };
  return patterns;
}

std::optional<int64_t> parse_time(std::string_view text, const std::string& pattern) {
  Civil c;
  bool have_date = false;
  int claimed_weekday = -1;
  std::string_view s = text;

  for (size_t i = 0; i < pattern.size(); ++i) {
    char p = pattern[i];
    if (p != '%') {
      if (s.empty() || s.front() != p) return std::nullopt;
      s.remove_prefix(1);
      continue;
    }
    if (++i >= pattern.size()) return std::nullopt;
    int v = 0;
    switch (pattern[i]) {
      case 'a':
        if (!match_name(s, kWeekdays, claimed_weekday)) return std::nullopt;
        break;
      case 'b':
        if (!match_name(s, kMonths, v)) return std::nullopt;
        c.month = v + 1;
        have_date = true;
        break;
      case 'd':
        if (!match_fixed_int(s, 2, v) || v < 1 || v > 31) return std::nullopt;
        c.day = v;
        have_date = true;
        break;
      case 'm':
        if (!match_fixed_int(s, 2, v) || v < 1 || v > 12) return std::nullopt;
        c.month = v;
        have_date = true;
        break;
      case 'Y':
        if (!match_fixed_int(s, 4, v)) return std::nullopt;
        c.year = v;
        have_date = true;
        break;
      case 'H':
        if (!match_fixed_int(s, 2, v) || v > 23) return std::nullopt;
        c.hour = v;
        break;
      case 'M':
        if (!match_fixed_int(s, 2, v) || v > 59) return std::nullopt;
        c.minute = v;
        break;
      case 'S':
        if (!match_fixed_int(s, 2, v) || v > 60) return std::nullopt;
        c.second = v;
        break;
      case 's': {
        int64_t ep = 0;
        size_t n = 0;
        while (n < s.size() && s[n] >= '0' && s[n] <= '9') {
          ep = ep * 10 + (s[n] - '0');
          ++n;
        }
        if (n == 0) return std::nullopt;
        if (ep < kEpochMin || ep >= kEpochMax) return std::nullopt;
        s.remove_prefix(n);
        if (!s.empty()) return std::nullopt;
        return ep * 1000;
      }
      default:
        return std::nullopt;  // unknown component
    }
  }
  if (!s.empty()) return std::nullopt;

  int64_t epoch_s = to_epoch_s(c);
  // A claimed weekday that contradicts the date is not a timestamp.
  if (claimed_weekday >= 0 && have_date && weekday_of(epoch_s) != claimed_weekday)
    return std::nullopt;
  return epoch_s * 1000;
}

std::optional<ParsedTime> detect_time(std::string_view text,
                                      const std::vector<std::string>& patterns) {
  for (const auto& p : patterns) {
    if (auto ms = parse_time(text, p)) return ParsedTime{*ms, p};
  }
  return std::nullopt;
}

std::string render_time(int64_t epoch_ms, const std::string& pattern) {
  int64_t epoch_s = epoch_ms / 1000;
  Civil c = from_epoch_s(epoch_s);
  std::string out;
  char buf[8];
  for (size_t i = 0; i < pattern.size(); ++i) {
    char p = pattern[i];
    if (p != '%') {
      out.push_back(p);
      continue;
    }
    ++i;
    switch (pattern[i]) {
      case 'a': out += kWeekdays[weekday_of(epoch_s)]; break;
      case 'b': out += kMonths[c.month - 1]; break;
      case 'd': std::snprintf(buf, sizeof buf, "%02d", c.day); out += buf; break;
      case 'm': std::snprintf(buf, sizeof buf, "%02d", c.month); out += buf; break;
      case 'Y': std::snprintf(buf, sizeof buf, "%04d", static_cast<int>(c.year)); out += buf; break;
      case 'H': std::snprintf(buf, sizeof buf, "%02d", c.hour); out += buf; break;
      case 'M': std::snprintf(buf, sizeof buf, "%02d", c.minute); out += buf; break;
      case 'S': std::snprintf(buf, sizeof buf, "%02d", c.second); out += buf; break;
      case 's': out += std::to_string(epoch_s); break;
      default: out.push_back(pattern[i]);
    }
  }
  return out;
}

}  // namespace honeyiot
