#include "nilclean/census.hpp"

#include <chrono>

#include "nilclean/expr.hpp"

namespace nilclean {

CensusRecord classify_record(const std::string& spec_text, const RingPtr& ring) {
    CensusRecord record;
    record.spec_text = spec_text;
    record.order = ring->order();

    const auto start = std::chrono::steady_clock::now();
    record.nil_clean = is_nil_clean_ring(ring).holds;
    const auto weakly = is_weakly_nil_clean_ring(ring);
    record.weakly_nil_clean = weakly.holds;
    record.classification = classify_structural(ring);
    const auto stop = std::chrono::steady_clock::now();
    record.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    if (record.classification.verdict == Classification::Verdict::NotWeaklyNilClean)
        record.witness = record.classification.witness;

    const bool structurally_weak =
        record.classification.verdict != Classification::Verdict::NotWeaklyNilClean;
    const bool structurally_nil_clean =
        record.classification.verdict == Classification::Verdict::NilClean;
    record.theorem_agrees = (record.weakly_nil_clean == structurally_weak) &&
                            (record.nil_clean == structurally_nil_clean);
    return record;
}

std::vector<CensusRecord> run_zn_census(std::uint32_t max_n, std::uint64_t order_cap) {
    std::vector<CensusRecord> records;
    for (std::uint32_t n = 2; n <= max_n; ++n) {
        const RingSpec spec = RingSpec::zn(n);
        records.push_back(classify_record(format_ring_spec(spec),
                                          construct_ring(spec, order_cap)));
    }
    return records;
}

std::string census_tsv_header() {
    return "spec\torder\tnil_clean\tweakly_nil_clean\tclassification\twitness\tmillis";
}

std::string census_tsv_row(const CensusRecord& record) {
    std::string row = record.spec_text;
    row += '\t';
    row += std::to_string(record.order);
    row += '\t';
    row += record.nil_clean ? "true" : "false";
    row += '\t';
    row += record.weakly_nil_clean ? "true" : "false";
    row += '\t';
    row += verdict_tag(record.classification.verdict);
    row += '\t';
    if (record.witness) row += std::to_string(*record.witness);
    row += '\t';
    row += std::to_string(record.millis);
    return row;
}

nlohmann::json census_json(const CensusRecord& record) {
    nlohmann::json j;
    j["spec"] = record.spec_text;
    j["order"] = record.order;
    j["class"] = verdict_tag(record.classification.verdict);
    j["witness"] = record.witness ? nlohmann::json(*record.witness) : nlohmann::json();
    if (record.classification.verdict == Classification::Verdict::WeaklyNilCleanOnly) {
        j["factorization"] = {{"e_nil", *record.classification.e_nil},
                              {"e_z3", *record.classification.e_z3}};
    } else {
        j["factorization"] = nullptr;
    }
    j["millis"] = record.millis;
    return j;
}

}  // namespace nilclean
