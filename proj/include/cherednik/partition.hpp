#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cherednik {

// Weakly decreasing list of positive parts. Trailing zeros are stripped on
// construction; the empty list is the empty diagram.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition from_columns(const std::vector<int>& cols);
  static Partition row(int cells);
  static Partition column(int cells);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based; zero past the end.
  int part(int i) const;
  // Length of column j, 1-based; zero past the end.
  int column_length(int j) const;
  std::vector<int> columns() const;

  std::string str() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Canonical order: size first, then lexicographic on parts.
  std::strong_ordering operator<=>(const Partition& o) const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using Cell = std::pair<int, int>;  // (row, column), 1-based

Partition transpose(const Partition& lambda);
std::int64_t content(const Partition& lambda);
std::int64_t f_value(const Partition& lambda);
int hook_length(const Partition& lambda, int i, int j);
std::map<Cell, int> hook_lengths(const Partition& lambda);
// Sum of (i-1) * lambda_i.
std::int64_t n_statistic(const Partition& lambda);
// Sum of i * lambda_i.
std::int64_t weighted_size(const Partition& lambda);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

// The j with |tau| - 1 + j - tau^T_j = s, if any.
std::optional<int> c_set_witness(const Partition& tau, std::int64_t s);
// Members of C_tau not exceeding max_s, ascending.
std::vector<std::int64_t> c_set_members(const Partition& tau, std::int64_t max_s);

Partition core_nu(const Partition& tau, std::int64_t s);

struct RecResult {
  Partition diagram;
  int k = 0;  // column index where the new column of length l sits
};
RecResult rec_nu_detailed(std::int64_t l, const Partition& eta);
Partition rec_nu(std::int64_t l, const Partition& eta);

struct GammaResult {
  Partition diagram;
  int j_s = 0;
  int k_insert = 0;
  std::int64_t s = 0;
  std::int64_t l = 0;
};
GammaResult gamma(const Partition& tau, std::int64_t s, std::int64_t l);

Partition tilde(const Partition& lambda, std::int64_t n);

struct PieriExpansion {
  std::set<Partition> plus, minus, zero;
  int corners = 0;
};
PieriExpansion pieri_expand(const Partition& tau);

std::vector<Cell> removable_cells(const Partition& lambda);
std::vector<Cell> addable_cells(const Partition& lambda);

}  // namespace cherednik
