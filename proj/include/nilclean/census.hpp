#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilclean/nilclean.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

// One classified ring: both oracle flags, the structural verdict, and the
// agreement between the two routes.
struct CensusRecord {
    std::string spec_text;
    std::uint32_t order = 0;
    bool nil_clean = false;
    bool weakly_nil_clean = false;
    Classification classification{};
    std::optional<std::uint32_t> witness;
    std::int64_t millis = 0;
    bool theorem_agrees = false;
};

// Runs both the brute-force oracles and the structural classifier.
CensusRecord classify_record(const std::string& spec_text, const RingPtr& ring);

// One record per n in 2..max_n, in ascending order.
std::vector<CensusRecord> run_zn_census(std::uint32_t max_n, std::uint64_t order_cap);

// TSV schema: spec, order, nil_clean, weakly_nil_clean, classification,
// witness, millis. Header row always emitted; absent witness is an empty
// field.
std::string census_tsv_header();
std::string census_tsv_row(const CensusRecord& record);

// JSON schema per record:
// {"spec","order","class","witness","factorization":{"e_nil","e_z3"}|null,"millis"}
nlohmann::json census_json(const CensusRecord& record);

}  // namespace nilclean
