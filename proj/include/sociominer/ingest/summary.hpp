#pragma once

#include "sociominer/ingest/records.hpp"

#include <vector>

namespace sociominer::ingest {

struct SummaryRow {
    std::string name; // mailing list / component scope, or "ALL"
    std::size_t committers = 0;
    std::size_t commits = 0;
    std::size_t senders = 0;
    std::size_t messages = 0;
};

// Counts by distinct author_email / sender_email plus record totals.
// One row per scope name (mailing lists, plus components observed in
// commit paths) sorted by name, preceded by an "ALL" row with the
// repository-wide totals. Inputs are expected to be date-filtered.
std::vector<SummaryRow> ingest_summary(const std::vector<CommitRecord>& commits,
                                       const std::vector<EmailMessage>& messages,
                                       const ComponentMap& map);

// header: name,committers,commits,senders,messages
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

} // namespace sociominer::ingest
