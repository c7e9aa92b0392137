#include "oracles.hpp"

#include <functional>
#include <map>

namespace cherednik::oracle {

std::vector<Integer> ssyt_polynomial(const Partition& shape, int m) {
  std::vector<Cell> cells;
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.part(i); ++j) cells.push_back({i, j});
  std::map<Cell, int> filling;
  std::vector<Integer> poly(1, Integer(0));
  std::function<void(std::size_t, int)> fill = [&](std::size_t idx, int weight) {
    if (idx == cells.size()) {
      if (static_cast<int>(poly.size()) <= weight) poly.resize(weight + 1, Integer(0));
      poly[weight] += 1;
      return;
    }
    auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 1) lo = std::max(lo, filling[{i, j - 1}]);
    if (i > 1) lo = std::max(lo, filling[{i - 1, j}] + 1);
    for (int v = lo; v <= m; ++v) {
      filling[{i, j}] = v;
      fill(idx + 1, weight + v - 1);
    }
    filling.erase({i, j});
  };
  fill(0, 0);
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  return poly;
}

int hook_by_walking(const Partition& lambda, int i, int j) {
  int arm = 0, leg = 0;
  while (j + arm + 1 <= lambda.part(i)) ++arm;
  while (lambda.part(i + leg + 1) >= j) ++leg;
  return arm + leg + 1;
}

Partition remove_hook_cells(const Partition& lambda, Cell vertex) {
  auto [i, j] = vertex;
  std::set<Cell> cells;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) cells.insert({r, c});
  std::set<Cell> out;
  for (auto [r, c] : cells) {
    const bool in_arm = r == i && c >= j;
    const bool in_leg = c == j && r >= i;
    if (in_arm || in_leg) continue;
    if (r > i && c > j)
      out.insert({r - 1, c - 1});
    else
      out.insert({r, c});
  }
  std::vector<int> rows;
  for (auto [r, c] : out) {
    if (static_cast<int>(rows.size()) < r) rows.resize(r, 0);
    ++rows[r - 1];
  }
  for (auto [r, c] : out)
    if (c > rows[r - 1]) throw std::logic_error("removal left a gap in a row");
  return Partition(rows);
}

std::vector<Partition> hook_insertions(int l, const Partition& beta, int e) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions_of(beta.size() + e))
    for (int i = 1; i <= lambda.length(); ++i)
      for (int j = 1; j <= lambda.part(i); ++j) {
        if (hook_by_walking(lambda, i, j) != e) continue;
        if (lambda.column_length(j) - i != l) continue;
        if (remove_hook_cells(lambda, {i, j}) == beta) out.push_back(lambda);
      }
  return out;
}

Partition gamma_of_empty(std::int64_t s, std::int64_t l) {
  std::vector<int> parts{static_cast<int>(s + 1)};
  for (std::int64_t k = 1; k < l; ++k) parts.push_back(1);
  return Partition(parts);
}

}  // namespace cherednik::oracle
