#include "sociominer/time.hpp"

#include "sociominer/common.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstdlib>

namespace sociominer {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date
// (Howard Hinnant's days_from_civil).
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yy + (m <= 2));
}

bool valid_date(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static const int dim[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int max_d = dim[m - 1];
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) max_d = 29;
    return d <= max_d;
}

std::optional<UtcInstant> make_instant(int y, int mo, int d, int h, int mi,
                                       int s, int offset_min) {
    if (!valid_date(y, mo, d)) return std::nullopt;
    if (h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60)
        return std::nullopt;
    if (s == 60) s = 59; // fold leap seconds
    std::int64_t days = days_from_civil(y, static_cast<unsigned>(mo),
                                        static_cast<unsigned>(d));
    std::int64_t secs = days * 86400 + h * 3600 + mi * 60 + s;
    secs -= static_cast<std::int64_t>(offset_min) * 60;
    return UtcInstant{secs};
}

bool read_int(std::string_view s, std::size_t& pos, int width, int& out) {
    if (pos + width > s.size()) return false;
    int v = 0;
    for (int i = 0; i < width; ++i) {
        char c = s[pos + i];
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        v = v * 10 + (c - '0');
    }
    pos += width;
    out = v;
    return true;
}

} // namespace

std::optional<UtcInstant> parse_iso8601(std::string_view raw) {
    std::string s = trim(raw);
    std::size_t pos = 0;
    int y, mo, d;
    if (!read_int(s, pos, 4, y)) return std::nullopt;
    if (pos >= s.size() || s[pos] != '-') return std::nullopt;
    ++pos;
    if (!read_int(s, pos, 2, mo)) return std::nullopt;
    if (pos >= s.size() || s[pos] != '-') return std::nullopt;
    ++pos;
    if (!read_int(s, pos, 2, d)) return std::nullopt;

    int h = 0, mi = 0, sec = 0, offset_min = 0;
    if (pos < s.size()) {
        if (s[pos] != 'T' && s[pos] != 't' && s[pos] != ' ') return std::nullopt;
        ++pos;
        if (!read_int(s, pos, 2, h)) return std::nullopt;
        if (pos >= s.size() || s[pos] != ':') return std::nullopt;
        ++pos;
        if (!read_int(s, pos, 2, mi)) return std::nullopt;
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            if (!read_int(s, pos, 2, sec)) return std::nullopt;
        }
        if (pos < s.size()) {
            char c = s[pos];
            if (c == 'Z' || c == 'z') {
                ++pos;
            } else if (c == '+' || c == '-') {
                int sign = c == '+' ? 1 : -1;
                ++pos;
                int oh = 0, om = 0;
                if (!read_int(s, pos, 2, oh)) return std::nullopt;
                if (pos < s.size() && s[pos] == ':') ++pos;
                if (pos < s.size()) {
                    if (!read_int(s, pos, 2, om)) return std::nullopt;
                }
                offset_min = sign * (oh * 60 + om);
            } else {
                return std::nullopt;
            }
        }
    }
    if (pos != s.size()) return std::nullopt;
    return make_instant(y, mo, d, h, mi, sec, offset_min);
}

std::optional<UtcInstant> parse_rfc2822(std::string_view raw) {
    std::string s = trim(raw);
    // Strip optional day-of-week ("Tue, ").
    if (auto comma = s.find(','); comma != std::string::npos)
        s = trim(std::string_view(s).substr(comma + 1));

    std::vector<std::string> parts = split_words(s);
    if (parts.size() < 4) return std::nullopt;

    int d = std::atoi(parts[0].c_str());
    if (d <= 0) return std::nullopt;

    static const std::array<const char*, 12> months = {
        "jan", "feb", "mar", "apr", "may", "jun",
        "jul", "aug", "sep", "oct", "nov", "dec"};
    std::string mon = to_lower(parts[1]).substr(0, 3);
    int mo = 0;
    for (int i = 0; i < 12; ++i)
        if (mon == months[static_cast<std::size_t>(i)]) mo = i + 1;
    if (mo == 0) return std::nullopt;

    int y = std::atoi(parts[2].c_str());
    if (y < 100) y += y < 50 ? 2000 : 1900; // two-digit years
    if (y < 1000) return std::nullopt;

    const std::string& hms = parts[3];
    std::size_t pos = 0;
    int h = 0, mi = 0, sec = 0;
    if (!read_int(hms, pos, 2, h)) return std::nullopt;
    if (pos >= hms.size() || hms[pos] != ':') return std::nullopt;
    ++pos;
    if (!read_int(hms, pos, 2, mi)) return std::nullopt;
    if (pos < hms.size() && hms[pos] == ':') {
        ++pos;
        if (!read_int(hms, pos, 2, sec)) return std::nullopt;
    }

    int offset_min = 0;
    if (parts.size() >= 5) {
        const std::string& zone = parts[4];
        if (zone.size() == 5 && (zone[0] == '+' || zone[0] == '-')) {
            std::size_t zp = 1;
            int oh = 0, om = 0;
            if (!read_int(zone, zp, 2, oh)) return std::nullopt;
            if (!read_int(zone, zp, 2, om)) return std::nullopt;
            offset_min = (zone[0] == '+' ? 1 : -1) * (oh * 60 + om);
        } else {
            std::string z = to_lower(zone);
            // Obsolete named zones; anything else is treated as UTC.
            if (z != "gmt" && z != "ut" && z != "utc" && z != "z")
                offset_min = 0;
        }
    }
    return make_instant(y, mo, d, h, mi, sec, offset_min);
}

std::string format_iso8601(UtcInstant t) {
    std::int64_t days = t.secs_since_epoch / 86400;
    std::int64_t rem = t.secs_since_epoch % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y;
    unsigned mo, d;
    civil_from_days(days, y, mo, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", y,
                  mo, d, static_cast<long long>(rem / 3600),
                  static_cast<long long>((rem % 3600) / 60),
                  static_cast<long long>(rem % 60));
    return std::string(buf);
}

} // namespace sociominer
