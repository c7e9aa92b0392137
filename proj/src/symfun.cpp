#include "cherednik/symfun.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace cherednik {

namespace {

// Murnaghan-Nakayama over beta-sets, memoized on (shape, remaining cycle lengths).
class MnSolver {
 public:
  std::int64_t eval(const std::vector<int>& shape, const std::vector<int>& rho, std::size_t pos) {
    if (pos == rho.size()) return shape.empty() ? 1 : 0;
    std::string key(shape.begin(), shape.end());
    key.push_back(static_cast<char>(0x7f));
    key.append(rho.begin() + static_cast<std::ptrdiff_t>(pos), rho.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int k = rho[pos];
    const int L = static_cast<int>(shape.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = shape[i] + (L - 1 - i);

    std::int64_t total = 0;
    std::vector<int> nb(L), next;
    for (int i = 0; i < L; ++i) {
      const int b = beta[i] - k;
      if (b < 0) continue;
      if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
      int between = 0;
      for (int t = i + 1; t < L; ++t)
        if (beta[t] > b) ++between;
      nb = beta;
      nb[i] = b;
      std::sort(nb.begin(), nb.end(), std::greater<>());
      next.clear();
      for (int t = 0; t < L; ++t) {
        int part = nb[t] - (L - 1 - t);
        if (part == 0) break;
        next.push_back(part);
      }
      const std::int64_t sub = eval(next, rho, pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::unordered_map<std::string, std::int64_t> memo_;
};

template <class K, class V>
class SharedCache {
 public:
  template <class Make>
  std::shared_ptr<const V> get(const K& key, Make make) {
    {
      std::shared_lock lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const V>(make());
    std::unique_lock lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<K, std::shared_ptr<const V>> map_;
};

SharedCache<Partition, std::vector<std::int64_t>>& row_cache() {
  static SharedCache<Partition, std::vector<std::int64_t>> cache;
  return cache;
}

SharedCache<int, std::vector<Partition>>& classes_cache() {
  static SharedCache<int, std::vector<Partition>> cache;
  return cache;
}

SharedCache<int, std::vector<Integer>>& class_size_cache() {
  static SharedCache<int, std::vector<Integer>> cache;
  return cache;
}

SharedCache<int, CharTable>& table_cache() {
  static SharedCache<int, CharTable> cache;
  return cache;
}

std::shared_ptr<const std::vector<Partition>> classes_of(int n) {
  return classes_cache().get(n, [n] { return partitions_of(n); });
}

std::shared_ptr<const std::vector<Integer>> class_sizes_of(int n) {
  return class_size_cache().get(n, [n] {
    std::vector<Integer> out;
    for (const auto& rho : *classes_of(n)) out.push_back(class_size(rho));
    return out;
  });
}

}  // namespace

Integer factorial(int n) {
  if (n < 0) throw DomainError("negative factorial");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer z_rho(const Partition& rho) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : rho.parts()) ++mult[p];
  for (auto [i, m] : mult) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
    z *= pw * factorial(m);
  }
  return z;
}

Integer class_size(const Partition& rho) { return factorial(rho.size()) / z_rho(rho); }

std::shared_ptr<const std::vector<std::int64_t>> character_row(const Partition& lambda) {
  if (lambda.size() > kCharacterRankLimit) throw DomainError("rank above character limit");
  return row_cache().get(lambda, [&lambda] {
    MnSolver solver;
    std::vector<std::int64_t> row;
    for (const auto& rho : *classes_of(lambda.size())) row.push_back(solver.eval(lambda.parts(), rho.parts(), 0));
    return row;
  });
}

std::int64_t character_value(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw DomainError("size mismatch");
  const auto& cls = *classes_of(rho.size());
  auto it = std::lower_bound(cls.begin(), cls.end(), rho);
  return (*character_row(lambda))[static_cast<std::size_t>(it - cls.begin())];
}

CharTable::CharTable(int n) : n_(n), parts_(*classes_of(n)) {
  for (const auto& p : parts_) {
    rows_.push_back(character_row(p));
    z_.push_back(z_rho(p));
  }
}

std::size_t CharTable::index(const Partition& p) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), p);
  if (it == parts_.end() || *it != p) throw DomainError("partition not of size n");
  return static_cast<std::size_t>(it - parts_.begin());
}

std::int64_t CharTable::value(const Partition& lambda, const Partition& rho) const {
  return (*rows_[index(lambda)])[index(rho)];
}

const Integer& CharTable::z(const Partition& rho) const { return z_[index(rho)]; }

std::shared_ptr<const CharTable> character_table(int n, int max_n) {
  if (n < 0) throw DomainError("negative rank");
  if (n > max_n || n > kCharacterRankLimit) throw DomainError("n above configured maximum");
  return table_cache().get(n, [n] { return CharTable(n); });
}

Integer kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size()) throw DomainError("size mismatch");
  const int n = lambda.size();
  auto a = character_row(lambda), b = character_row(mu), c = character_row(nu);
  auto sizes = class_sizes_of(n);
  Integer total = 0;
  for (std::size_t i = 0; i < sizes->size(); ++i) {
    if ((*a)[i] == 0 || (*b)[i] == 0 || (*c)[i] == 0) continue;
    Integer term = (*sizes)[i];
    term *= static_cast<long>((*a)[i]);
    term *= static_cast<long>((*b)[i]);
    term *= static_cast<long>((*c)[i]);
    total += term;
  }
  Integer nf = factorial(n);
  if (total % nf != 0) throw std::logic_error("non-integral Kronecker coefficient");
  return total / nf;
}

int reduced_kronecker_floor(const Partition& lambda, const Partition& tau, const Partition& mu) {
  return std::max({lambda.size() + tau.size() + mu.size(), lambda.size() + lambda.part(1),
                   tau.size() + tau.part(1), mu.size() + mu.part(1)});
}

ReducedKronecker reduced_kronecker_detailed(const Partition& lambda, const Partition& tau, const Partition& mu,
                                            int cap) {
  const int start = reduced_kronecker_floor(lambda, tau, mu);
  if (start + 1 > cap) throw DomainError("stabilization cap exceeded");
  Integer prev = kronecker(tilde(lambda, start), tilde(tau, start), tilde(mu, start));
  for (int n = start + 1; n <= cap; ++n) {
    Integer cur = kronecker(tilde(lambda, n), tilde(tau, n), tilde(mu, n));
    if (cur == prev) return {cur, start, n, n == start + 1};
    prev = cur;
  }
  throw DomainError("stabilization cap exceeded");
}

Integer reduced_kronecker(const Partition& lambda, const Partition& tau, const Partition& mu, int cap) {
  return reduced_kronecker_detailed(lambda, tau, mu, cap).value;
}

QSeries schur_principal(const Partition& lambda, int N) {
  if (n_statistic(lambda) > N) return QSeries(N);
  QSeries s = QSeries::monomial(N, static_cast<int>(n_statistic(lambda)));
  for (auto [cell, h] : hook_lengths(lambda)) s.div_one_minus(h);
  return s;
}

QSeries schur_bar(const Partition& lambda, int N) {
  if (weighted_size(lambda) > N) return QSeries(N);
  QSeries s = schur_principal(lambda, N).shifted(lambda.size());
  for (int j = 1; j <= N; ++j) s.div_one_minus(j);
  return s;
}

QSeries schur_finite(const Partition& lambda, int mvars) {
  if (mvars < 0) throw DomainError("negative variable count");
  if (lambda.length() > mvars) return QSeries(0);
  std::int64_t top = n_statistic(lambda);
  std::int64_t degree = n_statistic(lambda);
  for (auto [cell, h] : hook_lengths(lambda)) {
    const std::int64_t c = cell.second - cell.first;
    top += mvars + c;
    degree += mvars + c - h;
  }
  QSeries s = QSeries::monomial(static_cast<int>(top), static_cast<int>(n_statistic(lambda)));
  for (auto [cell, h] : hook_lengths(lambda)) s.mul_one_minus(mvars + cell.second - cell.first);
  for (auto [cell, h] : hook_lengths(lambda)) s.div_one_minus(h);
  for (std::int64_t i = degree + 1; i <= top; ++i)
    if (s[static_cast<int>(i)] != 0) throw std::logic_error("principal specialization is not a polynomial");
  return s.truncated(static_cast<int>(degree));
}

}  // namespace cherednik
