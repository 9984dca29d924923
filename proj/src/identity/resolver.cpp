#include "sociominer/identity/resolver.hpp"

#include "sociominer/common.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

namespace sociominer::identity {

using nlohmann::json;

std::string normalize_name(const std::string& name) {
    std::string out;
    bool pending_space = false;
    for (char raw : name) {
        unsigned char c = static_cast<unsigned char>(raw);
        if (std::isalnum(c)) {
            if (pending_space && !out.empty()) out += ' ';
            pending_space = false;
            out += static_cast<char>(std::tolower(c));
        } else {
            pending_space = true;
        }
    }
    return out;
}

namespace {

std::size_t token_count(const std::string& normalized) {
    if (normalized.empty()) return 0;
    return static_cast<std::size_t>(
               std::count(normalized.begin(), normalized.end(), ' ')) +
           1;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b); // lowest index becomes the root
        parent[b] = a;
    }
};

} // namespace

IdentityMap resolve_identities(
    const std::vector<std::pair<std::string, std::string>>& raw,
    const AliasOverrides& overrides) {
    // Rule 1: one node per distinct lowercased e-mail.
    std::vector<std::string> emails;
    std::map<std::string, std::size_t> email_index;
    std::map<std::string, std::set<std::string>> names_by_email;
    for (const auto& [name, email] : raw) {
        std::string e = to_lower(trim(email));
        if (e.empty()) continue;
        auto [it, inserted] = email_index.try_emplace(e, emails.size());
        if (inserted) emails.push_back(e);
        std::string n = trim(name);
        if (!n.empty()) names_by_email[e].insert(n);
    }

    UnionFind uf(emails.size());

    // never_merge pairs, both directions, by e-mail index.
    std::set<std::pair<std::size_t, std::size_t>> blocked;
    for (const auto& group : overrides.never_merge) {
        std::vector<std::size_t> idx;
        for (const auto& e : group) {
            auto it = email_index.find(to_lower(trim(e)));
            if (it != email_index.end()) idx.push_back(it->second);
        }
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                blocked.insert({std::min(idx[i], idx[j]), std::max(idx[i], idx[j])});
    }

    auto merge_blocked = [&](std::size_t ra, std::size_t rb) {
        // Any member pair across the two components blocked?
        std::vector<std::size_t> a_members, b_members;
        for (std::size_t i = 0; i < emails.size(); ++i) {
            std::size_t r = uf.find(i);
            if (r == ra) a_members.push_back(i);
            if (r == rb) b_members.push_back(i);
        }
        for (std::size_t a : a_members)
            for (std::size_t b : b_members)
                if (blocked.count({std::min(a, b), std::max(a, b)})) return true;
        return false;
    };

    // Rule 2: strong name match. Deterministic order: names sorted,
    // members within a name group sorted by e-mail.
    std::map<std::string, std::vector<std::size_t>> by_name;
    for (const auto& [email, names] : names_by_email) {
        for (const auto& n : names) {
            std::string norm = normalize_name(n);
            if (token_count(norm) >= 2) by_name[norm].push_back(email_index.at(email));
        }
    }
    for (auto& [norm, members] : by_name) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (std::size_t i = 1; i < members.size(); ++i) {
            std::size_t ra = uf.find(members[0]);
            std::size_t rb = uf.find(members[i]);
            if (ra == rb) continue;
            if (!merge_blocked(ra, rb)) uf.unite(ra, rb);
        }
    }

    // Rule 3: override merge groups, applied last; a collision with a
    // never_merge group is an error rather than a silent skip.
    for (const auto& group : overrides.merge) {
        std::vector<std::size_t> idx;
        for (const auto& e : group) {
            auto it = email_index.find(to_lower(trim(e)));
            if (it != email_index.end()) idx.push_back(it->second);
        }
        std::sort(idx.begin(), idx.end());
        for (std::size_t i = 1; i < idx.size(); ++i) {
            std::size_t ra = uf.find(idx[0]);
            std::size_t rb = uf.find(idx[i]);
            if (ra == rb) continue;
            if (merge_blocked(ra, rb))
                throw ConflictingOverride("merge group containing '" +
                                          emails[idx[i]] +
                                          "' intersects a never_merge group");
            uf.unite(ra, rb);
        }
    }

    // Collect partitions into identities.
    std::map<std::size_t, Identity> by_root;
    for (std::size_t i = 0; i < emails.size(); ++i) {
        Identity& id = by_root[uf.find(i)];
        id.emails.insert(emails[i]);
        if (auto it = names_by_email.find(emails[i]); it != names_by_email.end())
            id.names.insert(it->second.begin(), it->second.end());
    }
    std::vector<Identity> identities;
    identities.reserve(by_root.size());
    for (auto& [root, id] : by_root) {
        id.canonical_email = *id.emails.begin();
        id.id = fnv1a64_hex(id.canonical_email);
        identities.push_back(std::move(id));
    }
    return IdentityMap(std::move(identities));
}

IdentityMap::IdentityMap(std::vector<Identity> identities)
    : identities_(std::move(identities)) {
    std::sort(identities_.begin(), identities_.end(),
              [](const Identity& a, const Identity& b) {
                  return a.canonical_email < b.canonical_email;
              });
    for (std::size_t i = 0; i < identities_.size(); ++i)
        for (const auto& e : identities_[i].emails) by_email_[e] = i;
}

const Identity* IdentityMap::lookup(const std::string& email) const {
    auto it = by_email_.find(to_lower(trim(email)));
    if (it == by_email_.end()) return nullptr;
    return &identities_[it->second];
}

std::string IdentityMap::to_json() const {
    json out;
    out["identities"] = json::array();
    for (const auto& id : identities_) {
        out["identities"].push_back(
            {{"id", id.id},
             {"canonical_email", id.canonical_email},
             {"emails", std::vector<std::string>(id.emails.begin(), id.emails.end())},
             {"names", std::vector<std::string>(id.names.begin(), id.names.end())}});
    }
    return out.dump(2) + "\n";
}

IdentityMap IdentityMap::from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<Identity> identities;
    for (const auto& e : j.at("identities")) {
        Identity id;
        id.id = e.at("id").get<std::string>();
        id.canonical_email = e.at("canonical_email").get<std::string>();
        for (const auto& em : e.at("emails")) id.emails.insert(em.get<std::string>());
        for (const auto& n : e.at("names")) id.names.insert(n.get<std::string>());
        identities.push_back(std::move(id));
    }
    return IdentityMap(std::move(identities));
}

AliasOverrides overrides_from_json(const std::string& text) {
    json j = json::parse(text);
    AliasOverrides out;
    auto read_groups = [&](const char* key,
                           std::vector<std::set<std::string>>& dest) {
        if (!j.contains(key)) return;
        for (const auto& group : j.at(key)) {
            std::set<std::string> g;
            for (const auto& e : group) g.insert(to_lower(trim(e.get<std::string>())));
            dest.push_back(std::move(g));
        }
    };
    read_groups("merge", out.merge);
    read_groups("never_merge", out.never_merge);
    return out;
}

} // namespace sociominer::identity
