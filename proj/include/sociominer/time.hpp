#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sociominer {

// UTC instant with second resolution. All record timestamps are
// normalized to this before anything downstream sees them.
struct UtcInstant {
    std::int64_t secs_since_epoch = 0;

    friend auto operator<=>(const UtcInstant&, const UtcInstant&) = default;
};

// ISO-8601: "YYYY-MM-DD", "YYYY-MM-DD[T ]HH:MM:SS", optional "Z",
// "+HH:MM", "+HHMM" or "+HH" offset. Offsets are folded into UTC.
std::optional<UtcInstant> parse_iso8601(std::string_view s);

// RFC-2822 dates as found in mbox Date: headers, e.g.
// "Tue, 1 Apr 2014 10:30:00 +0200". Day-of-week optional; a few
// obsolete zone names (GMT, UT, UTC) are accepted.
std::optional<UtcInstant> parse_rfc2822(std::string_view s);

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso8601(UtcInstant t);

struct DateRange {
    UtcInstant start;
    UtcInstant end;

    // Inclusive of start, exclusive of end.
    bool contains(UtcInstant t) const { return start <= t && t < end; }
};

} // namespace sociominer
