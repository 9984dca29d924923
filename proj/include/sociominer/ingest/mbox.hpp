#pragma once

#include "sociominer/ingest/records.hpp"

#include <istream>
#include <stdexcept>

namespace sociominer::ingest {

struct MalformedMbox : std::runtime_error {
    explicit MalformedMbox(const std::string& what)
        : std::runtime_error("malformed mbox: " + what) {}
};

struct MboxParseResult {
    std::vector<EmailMessage> messages;
    // Non-fatal problems: skipped messages (missing From:/Date:),
    // HTML bodies, undecoded multiparts.
    std::vector<std::string> warnings;
};

// RFC-4155 mbox: messages delimited by "From " lines at line start,
// ">From " in bodies unescaped to "From ". Messages missing From: or
// Date: are skipped with a warning. Throws MalformedMbox when the
// first non-empty line is not a separator.
MboxParseResult parse_mbox(std::istream& in, const std::string& list_name);

// Strips quoted lines (">" prefix), everything from the first "-- "
// signature marker onward, "On ... wrote:" reply attributions, and
// collapses runs of blank lines to one. Idempotent.
std::string clean_email_body(const std::string& body_raw);

// Test helper counterpart of parse_mbox: renders messages back to
// mbox text with "From " separators and ">From " escaping.
std::string serialize_mbox(const std::vector<EmailMessage>& messages);

} // namespace sociominer::ingest
