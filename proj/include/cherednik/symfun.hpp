#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "cherednik/partition.hpp"
#include "cherednik/qseries.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

inline constexpr int kDefaultTableMax = 14;
inline constexpr int kDefaultStabilizationCap = 20;
// Character values are held in 64 bits; above this rank they could overflow.
inline constexpr int kCharacterRankLimit = 30;

Integer factorial(int n);

// z_rho = prod_i i^{m_i} m_i!
Integer z_rho(const Partition& rho);
// n! / z_rho
Integer class_size(const Partition& rho);

// chi^lambda on every class of S_|lambda|, in partitions_of(|lambda|) order.
// Memoized; safe to call concurrently.
std::shared_ptr<const std::vector<std::int64_t>> character_row(const Partition& lambda);
std::int64_t character_value(const Partition& lambda, const Partition& rho);

class CharTable {
 public:
  explicit CharTable(int n);
  int n() const { return n_; }
  const std::vector<Partition>& partitions() const { return parts_; }
  std::int64_t value(const Partition& lambda, const Partition& rho) const;
  const Integer& z(const Partition& rho) const;

 private:
  std::size_t index(const Partition& p) const;
  int n_;
  std::vector<Partition> parts_;
  std::vector<std::shared_ptr<const std::vector<std::int64_t>>> rows_;
  std::vector<Integer> z_;
};

std::shared_ptr<const CharTable> character_table(int n, int max_n = kDefaultTableMax);

Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

struct ReducedKronecker {
  Integer value;
  int n_start = 0;     // first rank evaluated
  int n_agreed = 0;    // rank at which two consecutive values agreed
  bool floor_only = false;  // agreement found right at n_start
};

// Stable value of the Kronecker coefficient of the padded shapes.
ReducedKronecker reduced_kronecker_detailed(const Partition& lambda, const Partition& tau, const Partition& mu,
                                            int cap = kDefaultStabilizationCap);
Integer reduced_kronecker(const Partition& lambda, const Partition& tau, const Partition& mu,
                          int cap = kDefaultStabilizationCap);
// Smallest rank from which the padded coefficient is constant.
int reduced_kronecker_floor(const Partition& lambda, const Partition& tau, const Partition& mu);

// s_lambda(1, q, q^2, ...)
QSeries schur_principal(const Partition& lambda, int N);
// q^{|lambda|} s_lambda(1, q, ...) / prod_{j>=1} (1 - q^j)
QSeries schur_bar(const Partition& lambda, int N);
// s_lambda(1, q, ..., q^{mvars-1}) as an exact polynomial; trunc equals its degree.
QSeries schur_finite(const Partition& lambda, int mvars);

}  // namespace cherednik
