#include "seqcomp/document.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace seqcomp {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string to_string(FamilyRole role) {
    switch (role) {
        case FamilyRole::css: return "css";
        case FamilyRole::escss: return "escss";
        case FamilyRole::zccs: return "zccs";
        case FamilyRole::mocss: return "mocss";
        case FamilyRole::ccc: return "ccc";
        case FamilyRole::gcp: return "gcp";
        case FamilyRole::raw: return "raw";
    }
    return "raw";
}

FamilyRole role_from_string(const std::string& name) {
    if (name == "css") return FamilyRole::css;
    if (name == "escss") return FamilyRole::escss;
    if (name == "zccs") return FamilyRole::zccs;
    if (name == "mocss") return FamilyRole::mocss;
    if (name == "ccc") return FamilyRole::ccc;
    if (name == "gcp") return FamilyRole::gcp;
    if (name == "raw") return FamilyRole::raw;
    throw std::invalid_argument("unknown family role: " + name);
}

FamilyDocument FamilyDocument::from_family(const SetFamily& family, FamilyRole role) {
    FamilyDocument doc;
    doc.q = family.q();
    doc.role = role;
    doc.sets.reserve(family.size());
    for (const auto& set : family.sets()) {
        std::vector<std::vector<int>> rows;
        rows.reserve(set.size());
        for (const auto& row : set.rows()) rows.push_back(row.elems());
        doc.sets.push_back(std::move(rows));
    }
    return doc;
}

SetFamily FamilyDocument::to_family() const {
    validate();
    std::vector<SequenceSet> sets;
    sets.reserve(this->sets.size());
    for (const auto& raw_set : this->sets) {
        std::vector<ResidueSequence> rows;
        rows.reserve(raw_set.size());
        for (const auto& raw_row : raw_set) rows.emplace_back(q, raw_row);
        sets.emplace_back(q, std::move(rows));
    }
    return SetFamily(std::move(sets));
}

void FamilyDocument::validate() const {
    if (schema_version != "1")
        throw std::invalid_argument("unsupported schema_version: " + schema_version);
    Alphabet alphabet(q);
    if (sets.empty()) throw std::invalid_argument("document has no sets");
    const std::size_t n = sets[0].size();
    if (n == 0) throw std::invalid_argument("document set has no rows");
    const std::size_t l = sets[0][0].size();
    for (const auto& raw_set : sets) {
        if (raw_set.size() != n)
            throw std::invalid_argument("document sets have inconsistent row counts");
        for (const auto& raw_row : raw_set) {
            if (raw_row.size() != l)
                throw std::invalid_argument("document rows have inconsistent lengths");
            for (int e : raw_row)
                if (e < 0 || static_cast<std::uint32_t>(e) >= q)
                    throw std::invalid_argument("document symbol out of range");
        }
    }
    if (claimed_params) {
        if (claimed_params->set_size != static_cast<long long>(sets.size()) ||
            claimed_params->flock_size != static_cast<long long>(n) ||
            claimed_params->length != static_cast<long long>(l))
            throw std::invalid_argument("claimed_params inconsistent with matrix dimensions");
    }
}

std::string to_json(const FamilyDocument& doc) {
    ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["q"] = doc.q;
    j["role"] = to_string(doc.role);
    if (doc.claimed_params) {
        j["claimed_params"] = ordered_json{{"M", doc.claimed_params->set_size},
                                           {"N", doc.claimed_params->flock_size},
                                           {"L", doc.claimed_params->length},
                                           {"Z", doc.claimed_params->zcz}};
    }
    j["sets"] = doc.sets;
    j["metadata"] = doc.metadata;
    return j.dump(2) + "\n";
}

FamilyDocument document_from_json(const std::string& text) {
    json j = json::parse(text);
    FamilyDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    doc.q = j.at("q").get<std::uint32_t>();
    doc.role = role_from_string(j.at("role").get<std::string>());
    if (j.contains("claimed_params") && !j["claimed_params"].is_null()) {
        const auto& cp = j["claimed_params"];
        doc.claimed_params = ClaimedParams{cp.at("M").get<long long>(),
                                           cp.at("N").get<long long>(),
                                           cp.at("L").get<long long>(),
                                           cp.value("Z", 0LL)};
    }
    doc.sets = j.at("sets").get<std::vector<std::vector<std::vector<int>>>>();
    if (j.contains("metadata"))
        doc.metadata = j["metadata"].get<std::map<std::string, std::string>>();
    doc.validate();
    return doc;
}

FamilyDocument read_document(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return document_from_json(buffer.str());
}

FamilyDocument read_document_file(const std::string& path) {
    if (path == "-") return read_document(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_document(in);
}

void write_document_file(const FamilyDocument& doc, const std::string& path) {
    const std::string text = to_json(doc);
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::string to_csv(const FamilyDocument& doc) {
    std::ostringstream out;
    for (std::size_t m = 0; m < doc.sets.size(); ++m)
        for (std::size_t n = 0; n < doc.sets[m].size(); ++n) {
            out << m << ',' << n;
            for (int e : doc.sets[m][n]) out << ',' << e;
            out << '\n';
        }
    return out.str();
}

} // namespace seqcomp
