#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surjcount/bigint.hpp"
#include "surjcount/graph.hpp"

namespace surjcount {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Reference decomposition data: the connected subgraph family of the (2,3)
/// biclique with the expected multiplicities and weights of each member's own
/// table.
struct ReferenceDecomposition {
    std::string name;
    Graph host;
    // expected (mu, lambda) per family member index; 0/0 where absent
    std::vector<std::pair<long, long>> rows;
};

/// The family members H1..H10 (largest first) and the expected tables.
const std::vector<Graph>& biclique23_family();
const std::vector<ReferenceDecomposition>& biclique23_reference_tables();

/// Runs one property battery. Suites: decomposition, interpolation, formulas,
/// approx, appendix.
std::vector<PropertyResult> verify_suite(const std::string& suite, int max_n, std::uint64_t seed);

}  // namespace surjcount
