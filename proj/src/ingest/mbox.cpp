#include "sociominer/ingest/mbox.hpp"

#include "sociominer/common.hpp"

#include <map>
#include <sstream>

namespace sociominer::ingest {

namespace {

bool is_separator(const std::string& line) { return line.rfind("From ", 0) == 0; }

// "Name <email>", "<email>", "email (Name)" or bare "email".
void parse_address(const std::string& value, std::string& name,
                   std::string& email) {
    std::string v = trim(value);
    std::size_t open = v.rfind('<');
    std::size_t close = v.rfind('>');
    if (open != std::string::npos && close != std::string::npos && open < close) {
        email = to_lower(trim(v.substr(open + 1, close - open - 1)));
        name = trim(v.substr(0, open));
        if (name.size() >= 2 && name.front() == '"' && name.back() == '"')
            name = trim(name.substr(1, name.size() - 2));
        return;
    }
    std::size_t paren = v.find('(');
    if (paren != std::string::npos) {
        std::size_t end = v.find(')', paren);
        name = trim(v.substr(paren + 1,
                             end == std::string::npos ? std::string::npos
                                                      : end - paren - 1));
        email = to_lower(trim(v.substr(0, paren)));
        return;
    }
    name.clear();
    email = to_lower(v);
}

struct RawMessage {
    std::map<std::string, std::string> headers; // keys lowercased, unfolded
    std::string body;                           // ">From " already unescaped
};

RawMessage split_message(const std::vector<std::string>& lines) {
    RawMessage msg;
    std::size_t i = 0;
    std::string current_key;
    for (; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (line.empty()) {
            ++i;
            break;
        }
        if ((line[0] == ' ' || line[0] == '\t') && !current_key.empty()) {
            msg.headers[current_key] += " " + trim(line);
            continue;
        }
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) {
            current_key.clear();
            continue; // tolerate junk header lines
        }
        current_key = to_lower(trim(line.substr(0, colon)));
        std::string value = trim(line.substr(colon + 1));
        // First occurrence wins for repeated headers.
        msg.headers.emplace(current_key, value);
    }
    for (; i < lines.size(); ++i) {
        std::string line = lines[i];
        if (line.rfind(">From ", 0) == 0) line.erase(0, 1);
        msg.body += line;
        msg.body += '\n';
    }
    // Trim the trailing separator blank line mbox writers add.
    while (msg.body.size() >= 2 && msg.body[msg.body.size() - 1] == '\n' &&
           msg.body[msg.body.size() - 2] == '\n')
        msg.body.pop_back();
    return msg;
}

} // namespace

std::string clean_email_body(const std::string& body_raw) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : body_raw) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    auto is_attribution = [](const std::string& line) {
        if (line.rfind("On ", 0) != 0) return false;
        std::string t = line;
        while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.pop_back();
        return t.size() >= 11 && t.compare(t.size() - 6, 6, "wrote:") == 0;
    };

    std::vector<std::string> kept;
    for (const std::string& line : lines) {
        if (!line.empty() && line[0] == '>') continue;
        if (line == "-- ") break; // signature marker: drop the rest
        if (is_attribution(line)) continue;
        kept.push_back(line);
    }

    auto blank = [](const std::string& l) { return trim(l).empty(); };
    while (!kept.empty() && blank(kept.front())) kept.erase(kept.begin());
    while (!kept.empty() && blank(kept.back())) kept.pop_back();

    std::string out;
    bool last_blank = false;
    bool first = true;
    for (const std::string& line : kept) {
        bool b = blank(line);
        if (b && last_blank) continue; // collapse runs of blank lines
        if (!first) out += '\n';
        if (!b) out += line;
        last_blank = b;
        first = false;
    }
    return out;
}

MboxParseResult parse_mbox(std::istream& in, const std::string& list_name) {
    MboxParseResult result;
    std::vector<std::vector<std::string>> raw_blocks;

    std::string line;
    bool seen_separator = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_separator(line)) {
            seen_separator = true;
            raw_blocks.emplace_back();
            continue;
        }
        if (!seen_separator) {
            if (trim(line).empty()) continue;
            throw MalformedMbox("first non-empty line is not a 'From ' separator");
        }
        raw_blocks.back().push_back(line);
    }

    std::size_t index = 0;
    for (const auto& block : raw_blocks) {
        RawMessage raw = split_message(block);

        auto warn_skip = [&](const std::string& header) {
            result.warnings.push_back("message " + std::to_string(index) + " in " +
                                      list_name + ": missing " + header +
                                      " header, skipped");
        };
        auto from_it = raw.headers.find("from");
        if (from_it == raw.headers.end()) {
            warn_skip("From:");
            ++index;
            continue;
        }
        auto date_it = raw.headers.find("date");
        if (date_it == raw.headers.end()) {
            warn_skip("Date:");
            ++index;
            continue;
        }
        auto ts = parse_rfc2822(date_it->second);
        if (!ts) ts = parse_iso8601(date_it->second);
        if (!ts) {
            result.warnings.push_back("message " + std::to_string(index) + " in " +
                                      list_name + ": unparseable Date: '" +
                                      date_it->second + "', skipped");
            ++index;
            continue;
        }

        EmailMessage msg;
        msg.list_name = list_name;
        parse_address(from_it->second, msg.sender_name, msg.sender_email);
        msg.timestamp = *ts;
        if (auto it = raw.headers.find("subject"); it != raw.headers.end())
            msg.subject = it->second;
        if (auto it = raw.headers.find("message-id"); it != raw.headers.end())
            msg.message_id = it->second;
        if (msg.message_id.empty())
            msg.message_id = "<" + list_name + "-" + std::to_string(index) + ">";

        msg.body_raw = raw.body;
        bool html = false;
        if (auto it = raw.headers.find("content-type"); it != raw.headers.end()) {
            std::string ct = to_lower(it->second);
            if (ct.rfind("text/html", 0) == 0) {
                html = true;
                result.warnings.push_back("message " + std::to_string(index) +
                                          " in " + list_name +
                                          ": HTML body skipped");
            } else if (ct.rfind("multipart/", 0) == 0) {
                result.warnings.push_back(
                    "message " + std::to_string(index) + " in " + list_name +
                    ": multipart body not decoded, treated as plain text");
            }
        }
        msg.body_clean = html ? std::string() : clean_email_body(msg.body_raw);

        result.messages.push_back(std::move(msg));
        ++index;
    }
    return result;
}

std::string serialize_mbox(const std::vector<EmailMessage>& messages) {
    std::string out;
    for (const auto& m : messages) {
        out += "From " + m.sender_email + " " + format_iso8601(m.timestamp) + "\n";
        out += "From: " + (m.sender_name.empty()
                               ? m.sender_email
                               : m.sender_name + " <" + m.sender_email + ">") +
               "\n";
        out += "Date: " + format_iso8601(m.timestamp) + "\n";
        out += "Subject: " + m.subject + "\n";
        out += "Message-ID: " + m.message_id + "\n";
        out += "\n";
        std::istringstream body(m.body_raw);
        std::string line;
        while (std::getline(body, line)) {
            if (line.rfind("From ", 0) == 0 || line.rfind(">From ", 0) == 0)
                out += ">";
            out += line;
            out += '\n';
        }
        out += '\n';
    }
    return out;
}

} // namespace sociominer::ingest
