#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sociominer::identity {

struct Identity {
    std::string id;              // fnv1a64 of canonical_email, hex
    std::string canonical_email; // lexicographically lowest member email
    std::set<std::string> emails;
    std::set<std::string> names;
};

struct AliasOverrides {
    std::vector<std::set<std::string>> merge;       // force into one identity
    std::vector<std::set<std::string>> never_merge; // pin distinct people
};

struct ConflictingOverride : std::runtime_error {
    explicit ConflictingOverride(const std::string& what)
        : std::runtime_error("conflicting override: " + what) {}
};

class IdentityMap {
public:
    explicit IdentityMap(std::vector<Identity> identities);

    // Exact lowercase e-mail lookup.
    const Identity* lookup(const std::string& email) const;

    const std::vector<Identity>& identities() const { return identities_; }

    std::string to_json() const;
    static IdentityMap from_json(const std::string& text);

private:
    std::vector<Identity> identities_; // sorted by canonical_email
    std::map<std::string, std::size_t> by_email_;
};

// Merge rules, applied in order:
//   1. exact e-mail match after lowercasing/trimming
//   2. exact normalized-name match when both names have >= 2 tokens,
//      unless a never_merge group separates the e-mails
//   3. override merge groups, forced last
// Throws ConflictingOverride when a merge group collides with a
// never_merge group.
IdentityMap resolve_identities(
    const std::vector<std::pair<std::string, std::string>>& raw, // (name, email)
    const AliasOverrides& overrides = {});

// casefold, collapse whitespace, strip punctuation
std::string normalize_name(const std::string& name);

AliasOverrides overrides_from_json(const std::string& text);

} // namespace sociominer::identity
