// JSON interchange for sequence families.
//
// Schema version "1": a single UTF-8 JSON object
//   { "schema_version": "1", "q": int, "role": str,
//     "claimed_params": {"M":..,"N":..,"L":..,"Z":..}?,   (optional)
//     "sets": [[[int]]], "metadata": {str: str} }
// All symbols are integers in [0, q); sets are M arrays of N arrays of L
// symbols, mirroring the printed matrix form.

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "seqcomp/sequence.hpp"

namespace seqcomp {

enum class FamilyRole { css, escss, zccs, mocss, ccc, gcp, raw };

std::string to_string(FamilyRole role);
FamilyRole role_from_string(const std::string& name);

struct ClaimedParams {
    long long set_size = 0;   // M
    long long flock_size = 0; // N
    long long length = 0;     // L
    long long zcz = 0;        // Z (0 = unspecified)
};

struct FamilyDocument {
    std::string schema_version = "1";
    std::uint32_t q = 2;
    FamilyRole role = FamilyRole::raw;
    std::optional<ClaimedParams> claimed_params;
    std::vector<std::vector<std::vector<int>>> sets;
    std::map<std::string, std::string> metadata;

    static FamilyDocument from_family(const SetFamily& family, FamilyRole role);
    SetFamily to_family() const;

    // Throws std::invalid_argument on schema violations.
    void validate() const;
};

// Serialization is deterministic: keys are emitted in a fixed order and the
// body carries no timestamps.
std::string to_json(const FamilyDocument& doc);
FamilyDocument document_from_json(const std::string& text);

FamilyDocument read_document(std::istream& in);
FamilyDocument read_document_file(const std::string& path); // "-" = stdin
void write_document_file(const FamilyDocument& doc, const std::string& path); // "-" = stdout

// Flat CSV: one line per row, "set_index,row_index,s0,s1,...".
std::string to_csv(const FamilyDocument& doc);

} // namespace seqcomp
