#ifndef Z4SD_CORE_CATALOG_HPP
#define Z4SD_CORE_CATALOG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z4code.hpp"

namespace z4sd {

// One expected value in the manifest; basis records whether the value comes
// from the published table the code was taken from or was computed by this
// project's own tools.
struct ExpectedValue {
    uint32_t value = 0;
    bool exact = true;
    std::string basis; // "published" or "computed"
};

struct CatalogRecord {
    std::string id;
    std::string file;
    uint32_t length = 0;

    std::string kind; // bdc | fnc | standard_form
    std::string row;  // bdc first row
    std::array<uint8_t, 3> border{0, 0, 0};
    std::string row_a, row_b; // fnc first rows

    std::optional<std::string> type; // "I" or "II"
    std::optional<ExpectedValue> d_lee;
    std::optional<ExpectedValue> d_euclidean;
    std::optional<ExpectedValue> residue_extremal; // value 0/1
    std::vector<std::array<uint32_t, 3>> s_invariants_t9;

    uint64_t search_budget = 0; // bounded search parameters for inexact records
    uint64_t search_seed = 0;
};

struct Catalog {
    std::string dir;
    std::vector<CatalogRecord> records;

    static Catalog load(const std::string& dir);
    const CatalogRecord* find(const std::string& id) const;
    Z4Code load_code(const CatalogRecord& rec) const;
};

// '*' and '?' wildcards, case-sensitive.
bool glob_match(const std::string& pattern, const std::string& text);

struct ReportOutcome {
    std::string text;    // fixed-width human table
    std::string tsv;     // machine-readable sidecar
    bool all_pass = false;
    uint32_t checked = 0;
};

// Rebuilds every matching record from its construction parameters, verifies
// self-duality, type, minimum weights (exact for |C| <= 2^32, witness search
// plus the residue lower bound otherwise), residue extremality and stored
// fingerprints; one PASS/FAIL row per code.
ReportOutcome verify_catalog(const Catalog& cat, const std::string& id_glob,
                             uint32_t threads = 1);

// Recomputes the support-count fingerprint triples (t = 9, k = 1..4) for the
// records that store them and diffs against the stored values.
ReportOutcome report_s_invariant_table(const Catalog& cat, uint32_t threads = 1);

// Partitions all length-24 records by the fingerprints (t = 9, k = 1..4);
// passes when every code sits in its own group.
ReportOutcome report_distinct_count(const Catalog& cat, uint32_t threads = 1);

} // namespace z4sd

#endif
