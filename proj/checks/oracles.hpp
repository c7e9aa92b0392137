#pragma once

#include <optional>
#include <set>
#include <vector>

#include "cherednik/partition.hpp"
#include "cherednik/qseries.hpp"

namespace cherednik::oracle {

// Generating polynomial of semistandard tableaux of the shape with entries
// in 1..m, weighted by q^{sum(entry - 1)}. Enumerates every tableau.
std::vector<Integer> ssyt_polynomial(const Partition& shape, int m);

// Hook length by walking the arm and the leg cell by cell.
int hook_by_walking(const Partition& lambda, int i, int j);

// Straight-hook removal done on an explicit set of cells.
Partition remove_hook_cells(const Partition& lambda, Cell vertex);

// Every diagram of size |beta| + e with an e-hook of leg l whose removal gives beta.
std::vector<Partition> hook_insertions(int l, const Partition& beta, int e);

// Gamma for the empty diagram: a hook with arm s and leg l - 1.
Partition gamma_of_empty(std::int64_t s, std::int64_t l);

}  // namespace cherednik::oracle
