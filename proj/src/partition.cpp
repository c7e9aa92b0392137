#include "cherednik/partition.hpp"

#include <algorithm>
#include <numeric>

#include "cherednik/rational.hpp"

namespace cherednik {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_columns(const std::vector<int>& cols) {
  std::vector<int> c = cols;
  while (!c.empty() && c.back() == 0) c.pop_back();
  for (std::size_t j = 1; j < c.size(); ++j)
    if (c[j] > c[j - 1] || c[j] < 0) throw DomainError("column lengths must be weakly decreasing");
  std::vector<int> rows(c.empty() ? 0 : c.front(), 0);
  for (int cj : c)
    for (int i = 0; i < cj; ++i) ++rows[i];
  return Partition(std::move(rows));
}

Partition Partition::row(int cells) {
  if (cells < 0) throw DomainError("negative cell count");
  return cells == 0 ? Partition() : Partition(std::vector<int>{cells});
}

Partition Partition::column(int cells) {
  if (cells < 0) throw DomainError("negative cell count");
  return Partition(std::vector<int>(cells, 1));
}

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::column_length(int j) const {
  if (j < 1) return 0;
  int count = 0;
  for (int p : parts_) {
    if (p < j) break;
    ++count;
  }
  return count;
}

std::vector<int> Partition::columns() const {
  std::vector<int> c(empty() ? 0 : parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return c;
}

std::string Partition::str() const {
  if (empty()) return "()";
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
  if (auto c = size_ <=> o.size_; c != 0) return c;
  return parts_ <=> o.parts_;
}

Partition transpose(const Partition& lambda) { return Partition(lambda.columns()); }

std::int64_t content(const Partition& lambda) {
  std::int64_t total = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) total += j - i;
  return total;
}

std::int64_t f_value(const Partition& lambda) {
  std::int64_t n = lambda.size();
  return (n * n - n) / 2 + content(lambda);
}

int hook_length(const Partition& lambda, int i, int j) {
  if (i < 1 || j < 1 || j > lambda.part(i)) throw DomainError("cell outside diagram");
  return lambda.part(i) - j + lambda.column_length(j) - i + 1;
}

std::map<Cell, int> hook_lengths(const Partition& lambda) {
  std::map<Cell, int> out;
  auto cols = lambda.columns();
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      out[{i, j}] = lambda.part(i) - j + cols[j - 1] - i + 1;
  return out;
}

std::int64_t n_statistic(const Partition& lambda) {
  std::int64_t total = 0;
  for (int i = 1; i <= lambda.length(); ++i) total += static_cast<std::int64_t>(i - 1) * lambda.part(i);
  return total;
}

std::int64_t weighted_size(const Partition& lambda) {
  return n_statistic(lambda) + lambda.size();
}

static void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    generate(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto part = partitions_of(k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<int> c_set_witness(const Partition& tau, std::int64_t s) {
  const std::int64_t size = tau.size();
  const int width = tau.part(1);
  if (s >= size + width) return static_cast<int>(s - size + 1);
  auto cols = tau.columns();
  // j -> size - 1 + j - cols[j-1] is strictly increasing on [1, width].
  int lo = 1, hi = width;
  while (lo <= hi) {
    int mid = lo + (hi - lo) / 2;
    std::int64_t g = size - 1 + mid - cols[mid - 1];
    if (g == s) return mid;
    if (g < s)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return std::nullopt;
}

std::vector<std::int64_t> c_set_members(const Partition& tau, std::int64_t max_s) {
  std::vector<std::int64_t> out;
  const std::int64_t size = tau.size();
  for (int j = 1;; ++j) {
    std::int64_t g = size - 1 + j - tau.column_length(j);
    if (g > max_s) break;
    out.push_back(g);
  }
  return out;
}

Partition core_nu(const Partition& tau, std::int64_t s) {
  auto js = c_set_witness(tau, s);
  if (!js) throw DomainError("s not in C_tau");
  const int j_s = *js;
  const int width = tau.part(1);
  std::vector<int> cols;
  for (int j = 1; j <= std::max(j_s - 1, width - 1); ++j)
    cols.push_back(j < j_s ? tau.column_length(j) + 1 : tau.column_length(j + 1));
  return Partition::from_columns(cols);
}

RecResult rec_nu_detailed(std::int64_t l, const Partition& eta) {
  if (l < 0) throw DomainError("rec requires l >= 0");
  auto cols = eta.columns();
  int k = 1;
  while (k <= static_cast<int>(cols.size()) && cols[k - 1] >= l + 1) ++k;
  std::vector<int> out;
  for (int j = 1; j < k; ++j) out.push_back(cols[j - 1] - 1);
  out.push_back(static_cast<int>(l));
  for (int j = k + 1; j <= static_cast<int>(cols.size()) + 1; ++j) out.push_back(cols[j - 2]);
  return {Partition::from_columns(out), k};
}

Partition rec_nu(std::int64_t l, const Partition& eta) { return rec_nu_detailed(l, eta).diagram; }

GammaResult gamma(const Partition& tau, std::int64_t s, std::int64_t l) {
  auto js = c_set_witness(tau, s);
  if (!js) throw DomainError("s not in C_tau");
  const int col = tau.column_length(*js);
  if (l < -col) throw DomainError("l below -tau^T_{j_s}");
  auto rec = rec_nu_detailed(col + l, core_nu(tau, s));
  return {rec.diagram, *js, rec.k, s, l};
}

Partition tilde(const Partition& lambda, std::int64_t n) {
  if (n < lambda.part(1) + lambda.size()) throw DomainError("n too small for tilde");
  std::vector<int> parts{static_cast<int>(n - lambda.size())};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

std::vector<Cell> removable_cells(const Partition& lambda) {
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i)});
  return out;
}

std::vector<Cell> addable_cells(const Partition& lambda) {
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (i == 1 || lambda.part(i - 1) > lambda.part(i)) out.push_back({i, lambda.part(i) + 1});
  return out;
}

static Partition with_row_delta(const Partition& lambda, int row, int delta) {
  std::vector<int> parts = lambda.parts();
  if (row > static_cast<int>(parts.size())) parts.resize(row, 0);
  parts[row - 1] += delta;
  return Partition(std::move(parts));
}

PieriExpansion pieri_expand(const Partition& tau) {
  PieriExpansion out;
  for (auto [i, j] : addable_cells(tau)) out.plus.insert(with_row_delta(tau, i, 1));
  auto removable = removable_cells(tau);
  out.corners = static_cast<int>(removable.size());
  for (auto [i, j] : removable) {
    Partition smaller = with_row_delta(tau, i, -1);
    out.minus.insert(smaller);
    for (auto [a, b] : addable_cells(smaller)) {
      Partition moved = with_row_delta(smaller, a, 1);
      if (moved != tau) out.zero.insert(moved);
    }
  }
  return out;
}

}  // namespace cherednik
