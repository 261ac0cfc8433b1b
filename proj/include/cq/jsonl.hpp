#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cq/search.hpp"

namespace cq {

using ordered_json = nlohmann::ordered_json;

/// Certificate/hit wire schema. Integer-valued fields are serialized as
/// decimal strings (discriminants overflow 64-bit consumers early).
ordered_json certificate_json(const Certificate& cert);
ordered_json hit_json(const SweepHit& hit);

struct CorpusEntry {
    std::string label;
    Int conductor;
    Int field_disc;
    std::string source;
    std::optional<Int> family_z;
};

std::vector<CorpusEntry> load_corpus(std::istream& in);

struct CorpusReport {
    int checked = 0;
    int passed = 0;
    int failed = 0;
    int informational = 0;
    std::vector<ordered_json> lines;

    bool ok() const { return failed == 0; }
};

/// Recompute conductor and field discriminant through certify_z for every
/// entry with family_z; entries without are listed as informational.
CorpusReport corpus_check(const std::vector<CorpusEntry>& entries);

}  // namespace cq
