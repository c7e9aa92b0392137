#include "cherednik/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "cherednik/symfun.hpp"

namespace cherednik {

std::vector<HookSpec> e_hooks(const Partition& lambda, int e) {
  if (e < 1) throw DomainError("hook length must be positive");
  std::vector<HookSpec> out;
  auto cols = lambda.columns();
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int leg = cols[j - 1] - i;
      if (lambda.part(i) - j + leg + 1 == e) out.push_back({{i, j}, e, leg});
    }
  return out;
}

Partition remove_hook(const Partition& lambda, Cell vertex) {
  auto [i, j] = vertex;
  if (i < 1 || j < 1 || j > lambda.part(i)) throw DomainError("vertex outside diagram");
  const int leg = lambda.column_length(j) - i;
  std::vector<int> rows = lambda.parts();
  for (int r = i; r <= i + leg; ++r) rows[r - 1] = j - 1 + std::max(0, lambda.part(r + 1) - j);
  return Partition(std::move(rows));
}

Partition classical_core(const Partition& lambda, int e) {
  Partition cur = lambda;
  for (;;) {
    auto hooks = e_hooks(cur, e);
    if (hooks.empty()) return cur;
    // e_hooks lists cells row by row, so the first is the smallest vertex.
    cur = remove_hook(cur, hooks.front().vertex);
  }
}

ClassicalRec classical_rec_detailed(int l, const Partition& beta, int e) {
  if (e <= beta.size()) throw DomainError("regime violated");
  if (l < 0 || l > e - 1) throw DomainError("leg must satisfy 0 <= l <= e-1");
  int j = 1;
  while (beta.column_length(j) >= l + 1) ++j;
  int i = 1;
  if (j == 1)
    while (beta.part(i) >= e - l) ++i;

  std::vector<int> rows;
  const int last = std::max(beta.length(), i + l);
  for (int r = 1; r <= last; ++r) {
    if (r < i || r > i + l)
      rows.push_back(beta.part(r));
    else if (r == i)
      rows.push_back(j - 1 + e - l);
    else
      rows.push_back(beta.part(r - 1) + 1);
  }
  Partition out(std::move(rows));
  if (hook_length(out, i, j) != e || out.column_length(j) - i != l || remove_hook(out, {i, j}) != beta)
    throw std::logic_error("hook insertion failed to invert removal");
  return {out, {i, j}};
}

Partition classical_rec(int l, const Partition& beta, int e) { return classical_rec_detailed(l, beta, e).diagram; }

static void check_regime(int n, int s) {
  if (!(n > std::max(2 * s, 1)) || n <= 3) throw DomainError("regime violated");
}

bool verma_simple_classical(const Partition& lambda, int n, int s) {
  if (lambda.size() != n) throw DomainError("size mismatch");
  check_regime(n, s);
  auto hooks = e_hooks(lambda, n - s);
  if (hooks.size() > 1) throw std::logic_error("more than one (n-s)-hook in the unique-hook regime");
  return hooks.empty() || hooks.front().arm() == 0;
}

std::vector<Partition> block_chain(const Partition& beta, int n, int s) {
  if (beta.size() != s) throw DomainError("size mismatch");
  check_regime(n, s);
  std::vector<Partition> out;
  for (int l = n - s - 1; l >= 0; --l) out.push_back(classical_rec(l, beta, n - s));
  return out;
}

QSeries classical_graded_char(const Partition& mu, const Partition& tau, int n, int N) {
  if (mu.size() != n || tau.size() != n) throw DomainError("size mismatch");
  if (N < 0) throw DomainError("negative truncation");
  auto a = character_row(mu), b = character_row(tau);
  const auto classes = partitions_of(n);
  std::vector<Integer> acc(N + 1, Integer(0)), term(N + 1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if ((*a)[c] == 0 || (*b)[c] == 0) continue;
    Integer w = class_size(classes[c]);
    w *= static_cast<long>((*a)[c]);
    w *= static_cast<long>((*b)[c]);
    std::fill(term.begin(), term.end(), Integer(0));
    term[0] = 1;
    for (int k : classes[c].parts())
      for (int i = k; i <= N; ++i) term[i] += term[i - k];
    for (int i = 0; i <= N; ++i) acc[i] += w * term[i];
  }
  const Integer nf = factorial(n);
  std::vector<Rational> coeffs;
  for (auto& x : acc) coeffs.emplace_back(x, nf);
  for (auto& x : coeffs) x.canonicalize();
  return QSeries(N, std::move(coeffs));
}

Integer hook_dimension(const Partition& lambda) {
  Integer num = factorial(lambda.size());
  Integer den = 1;
  for (auto [cell, h] : hook_lengths(lambda)) den *= h;
  return num / den;
}

}  // namespace cherednik
