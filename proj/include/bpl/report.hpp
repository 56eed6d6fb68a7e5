#pragma once

#include "bpl/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bpl {

struct ReportOptions {
    // Empty means every sphere recorded on the construction.
    std::vector<std::string> spheres;
    // beta' = ratio * beta specializations for tori pairs.
    std::vector<Rat> local_systems{1, -1, 2};
    Rat kappa{1};
};

Json invariant_report(const Construction& c, const ReportOptions& opts = {});

// Family specs:
//   {"family": "T_slice", "c": 1, "m": 0, "k_min": 0, "k_max": 5}
//   {"family": "Lambda_gcd", "diffs": [[1, 2], [2, 4]]}
//   {"family": "Xi_annulus", "n": 1, "k1": [0, 1, 2], "l1": 1}
// Emits entries, pairwise distinctness certificates and discrepancy entries.
Json family_catalog(const Json& spec);
// Number of discrepancy entries in a catalog.
size_t discrepancy_count(const Json& catalog);

std::string render_svg(const Construction& c);
// Flat "path: value" listing of a report, one line per leaf.
std::string render_text(const Json& j);

}  // namespace bpl
