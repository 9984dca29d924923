#pragma once

#include "sociominer/ingest/records.hpp"

#include <istream>
#include <stdexcept>

namespace sociominer::ingest {

struct MalformedRecord : std::runtime_error {
    std::size_t line_no;
    MalformedRecord(std::size_t line, const std::string& what)
        : std::runtime_error("git log line " + std::to_string(line) + ": " + what),
          line_no(line) {}
};

struct UnparseableDate : std::runtime_error {
    std::size_t line_no;
    explicit UnparseableDate(std::size_t line)
        : std::runtime_error("git log line " + std::to_string(line) +
                             ": unparseable date"),
          line_no(line) {}
};

// Plain-text export, one record:
//
//   commit <id>
//   author <name> <<email>>
//   date <ISO-8601>
//   <blank>
//   <file path>        (zero or more)
//   ---
//
// File paths are deduplicated within a record, first occurrence wins.
std::vector<CommitRecord> parse_git_log(std::istream& in);

} // namespace sociominer::ingest
