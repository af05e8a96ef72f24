#pragma once

#include "brauer.hpp"
#include "census.hpp"
#include "frobenius.hpp"
#include "lattice.hpp"

#include <json.hpp>

namespace mk3 {

using Json = nlohmann::ordered_json;

Json to_json(const RealWitness& w);
Json to_json(const ResidueWitness& w);
Json to_json(const LocalSolvabilityReport& r);
Json to_json(const PlaceScan& s, size_t nclasses);
Json to_json(const ObstructionReport& r);
Json to_json(const SaFailureReport& r);
Json to_json(const RationalBmReport& r);
Json to_json(const LatticeReport& r);
Json to_json(const FrobeniusReport& r);
Json to_json(const CensusSummary& s);
Json to_json(const HasseCensus& c);
Json search_json(const Surface& s, const std::vector<FoundPoint>& pts, bool rational);

std::string half_str(int halves);

// 0 for a computed verdict (including "no obstruction"), 2 for inconclusive
int report_exit_code(const ObstructionReport& r);

// plain-text integer matrix: rows of space-separated integers
std::string matrix_text(const IntMat& m);

}  // namespace mk3
