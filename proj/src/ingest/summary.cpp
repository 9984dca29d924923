#include "sociominer/ingest/summary.hpp"

#include "sociominer/common.hpp"

#include <map>
#include <set>

namespace sociominer::ingest {

std::vector<SummaryRow> ingest_summary(const std::vector<CommitRecord>& commits,
                                       const std::vector<EmailMessage>& messages,
                                       const ComponentMap& map) {
    struct Tally {
        std::set<std::string> committers;
        std::size_t commits = 0;
        std::set<std::string> senders;
        std::size_t messages = 0;
    };
    std::map<std::string, Tally> scopes;
    Tally all;

    for (const auto& c : commits) {
        all.committers.insert(c.author_email);
        ++all.commits;
        std::set<std::string> touched;
        for (const auto& f : c.files) touched.insert(attribute_component(f, map));
        for (const auto& comp : touched) {
            auto& t = scopes[comp];
            t.committers.insert(c.author_email);
            ++t.commits;
        }
    }
    for (const auto& m : messages) {
        all.senders.insert(m.sender_email);
        ++all.messages;
        auto& t = scopes[m.list_name];
        t.senders.insert(m.sender_email);
        ++t.messages;
    }

    std::vector<SummaryRow> rows;
    rows.push_back({"ALL", all.committers.size(), all.commits,
                    all.senders.size(), all.messages});
    for (const auto& [name, t] : scopes)
        rows.push_back(
            {name, t.committers.size(), t.commits, t.senders.size(), t.messages});
    return rows;
}

std::string summary_to_csv(const std::vector<SummaryRow>& rows) {
    std::string out = "name,committers,commits,senders,messages\n";
    for (const auto& r : rows) {
        out += csv_field(r.name) + "," + std::to_string(r.committers) + "," +
               std::to_string(r.commits) + "," + std::to_string(r.senders) + "," +
               std::to_string(r.messages) + "\n";
    }
    return out;
}

} // namespace sociominer::ingest
