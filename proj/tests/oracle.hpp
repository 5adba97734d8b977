#pragma once

#include "rep/scan.hpp"
#include "rep/search.hpp"

namespace rep::testing {

// From-scratch tree statistics: enumerates ALL words level by level (no
// symmetry reduction, no incremental state) and classifies each one with
// the naive scan. Deliberately independent of the search module, usable as
// a cross-check on small instances only.
TreeStats enumerate_tree(int k, const FreenessSpec& spec);

}  // namespace rep::testing
