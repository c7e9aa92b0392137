#pragma once

#include <vector>

#include "cherednik/partition.hpp"
#include "cherednik/qseries.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

struct HookSpec {
  Cell vertex;
  int length = 0;
  int leg = 0;
  int arm() const { return length - 1 - leg; }
  bool operator==(const HookSpec&) const = default;
};

std::vector<HookSpec> e_hooks(const Partition& lambda, int e);

// Deletes the straight hook at vertex and slides the cells strictly below
// and to the right of it one step up and one step left.
Partition remove_hook(const Partition& lambda, Cell vertex);

Partition classical_core(const Partition& lambda, int e);

struct ClassicalRec {
  Partition diagram;
  Cell vertex;
};
ClassicalRec classical_rec_detailed(int l, const Partition& beta, int e);
Partition classical_rec(int l, const Partition& beta, int e);

bool verma_simple_classical(const Partition& lambda, int n, int s);

std::vector<Partition> block_chain(const Partition& beta, int n, int s);

// Graded multiplicity series of mu in C[x_1..x_n] (x) tau, truncated at q^N.
QSeries classical_graded_char(const Partition& mu, const Partition& tau, int n, int N);

// Hook length formula.
Integer hook_dimension(const Partition& lambda);

}  // namespace cherednik
