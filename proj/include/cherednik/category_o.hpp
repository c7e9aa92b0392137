#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/qseries.hpp"
#include "cherednik/symfun.hpp"

namespace cherednik {

// Graded multiplicity of mu in the Verma object with lowest weight tau.
QSeries verma_char_component(const Partition& mu, const Partition& tau, int N,
                             int cap = kDefaultStabilizationCap);

struct Resolution {
  Partition tau;
  std::int64_t s = 0;
  int sign = 1;
  std::int64_t r = 1;
  std::vector<GammaResult> terms;
  std::vector<std::int64_t> offsets;
};
// Terms l = 0..max_l; for sign = -1 the list also stops at l = tau^T_{j_s}.
Resolution resolution(const Partition& tau, std::int64_t s, int sign, std::int64_t r, std::int64_t max_l);

QSeries simple_char_component(const Partition& mu, const Partition& tau, std::int64_t s, std::int64_t r, int N,
                              int cap = kDefaultStabilizationCap);

QSeries simple_char_L_empty_closed(const Partition& mu, int k, int N);

std::int64_t min_degree_poly(const Partition& mu);
std::int64_t min_degree_bound(const Partition& mu, const Partition& tau);

struct VermaTable {
  std::map<Partition, QSeries> components;
  std::optional<Rational> lowest_weight;
};
VermaTable character_table_of_verma(const Partition& tau, int size_bound, int N,
                                    const std::optional<ExactPoint>& pt = std::nullopt,
                                    int cap = kDefaultStabilizationCap);

}  // namespace cherednik
