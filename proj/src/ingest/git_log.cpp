#include "sociominer/ingest/git_log.hpp"

#include "sociominer/common.hpp"

#include <unordered_set>

namespace sociominer::ingest {

namespace {

// getline tolerant of CRLF input.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    return true;
}

} // namespace

std::vector<CommitRecord> parse_git_log(std::istream& in) {
    std::vector<CommitRecord> records;
    std::string line;
    std::size_t line_no = 0;

    while (true) {
        // Skip blank lines between records.
        bool got = false;
        while ((got = next_line(in, line, line_no)) && trim(line).empty()) {
        }
        if (!got) break;

        if (line.rfind("commit ", 0) != 0)
            throw MalformedRecord(line_no, "expected 'commit <id>'");
        CommitRecord rec;
        rec.commit_id = trim(line.substr(7));
        if (rec.commit_id.empty())
            throw MalformedRecord(line_no, "empty commit id");

        if (!next_line(in, line, line_no) || line.rfind("author ", 0) != 0)
            throw MalformedRecord(line_no, "expected 'author <name> <<email>>'");
        {
            std::string rest = line.substr(7);
            std::size_t open = rest.rfind('<');
            std::size_t close = rest.rfind('>');
            if (open == std::string::npos || close == std::string::npos ||
                close < open)
                throw MalformedRecord(line_no, "author line missing <email>");
            rec.author_name = trim(rest.substr(0, open));
            rec.author_email = to_lower(trim(rest.substr(open + 1, close - open - 1)));
            if (rec.author_email.empty())
                throw MalformedRecord(line_no, "empty author email");
        }

        if (!next_line(in, line, line_no) || line.rfind("date ", 0) != 0)
            throw MalformedRecord(line_no, "expected 'date <ISO-8601>'");
        {
            auto t = parse_iso8601(trim(line.substr(5)));
            if (!t) throw UnparseableDate(line_no);
            rec.timestamp = *t;
        }

        if (!next_line(in, line, line_no) || !trim(line).empty())
            throw MalformedRecord(line_no, "expected blank line after date");

        std::unordered_set<std::string> seen;
        bool terminated = false;
        while (next_line(in, line, line_no)) {
            if (line == "---") {
                terminated = true;
                break;
            }
            std::string path = trim(line);
            if (path.empty())
                throw MalformedRecord(line_no, "blank line inside file list");
            if (seen.insert(path).second) rec.files.push_back(std::move(path));
        }
        if (!terminated)
            throw MalformedRecord(line_no, "record not terminated by '---'");

        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace sociominer::ingest
