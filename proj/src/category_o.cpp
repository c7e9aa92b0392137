#include "cherednik/category_o.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace cherednik {

QSeries verma_char_component(const Partition& mu, const Partition& tau, int N, int cap) {
  if (N < 0) throw DomainError("negative truncation");
  QSeries total(N);
  for (const auto& lambda : partitions_up_to(mu.size() + tau.size())) {
    if (weighted_size(lambda) > N) continue;
    Integer g = reduced_kronecker(lambda, tau, mu, cap);
    if (g == 0) continue;
    total += schur_bar(lambda, N).scaled(Rational(g));
  }
  return total.mul_one_minus(1);
}

Resolution resolution(const Partition& tau, std::int64_t s, int sign, std::int64_t r, std::int64_t max_l) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (r == 0 || (r > 0) != (sign > 0)) throw DomainError("r must be nonzero with the given sign");
  auto js = c_set_witness(tau, s);
  if (!js) throw DomainError("s not in C_tau");
  std::int64_t last = max_l;
  if (sign < 0) last = std::min<std::int64_t>(last, tau.column_length(*js));
  Resolution out{tau, s, sign, r, {}, {}};
  for (std::int64_t l = 0; l <= last; ++l) {
    GammaResult g = gamma(tau, s, sign * l);
    const std::int64_t offset = r * (g.diagram.size() - tau.size());
    if (sign > 0 && l > 0 && offset != r * (g.j_s - g.k_insert + l))
      throw std::logic_error("offset disagrees with the insertion position");
    if (offset < 0 || (l > 0 && offset <= out.offsets.back()))
      throw std::logic_error("resolution offsets must increase");
    out.terms.push_back(std::move(g));
    out.offsets.push_back(offset);
  }
  return out;
}

static QSeries shifted_into(const QSeries& s, int offset, int N) {
  QSeries out(N);
  for (int i = 0; i <= s.trunc() && i + offset <= N; ++i) out.set(i + offset, s[i]);
  return out;
}

QSeries simple_char_component(const Partition& mu, const Partition& tau, std::int64_t s, std::int64_t r, int N,
                              int cap) {
  if (N < 0) throw DomainError("negative truncation");
  const int sign = r > 0 ? 1 : -1;
  // Offsets grow by at least |r| per step, so N / |r| + 1 terms suffice.
  Resolution res = resolution(tau, s, sign, r, N / std::abs(r) + 1);
  QSeries total(N);
  for (std::size_t l = 0; l < res.terms.size(); ++l) {
    const std::int64_t off = res.offsets[l];
    if (off > N) break;
    QSeries v = verma_char_component(mu, res.terms[l].diagram, N - static_cast<int>(off), cap);
    QSeries term = shifted_into(v, static_cast<int>(off), N);
    if (l % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

QSeries simple_char_L_empty_closed(const Partition& mu, int k, int N) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (N < 0) throw DomainError("negative truncation");
  QSeries poly = schur_finite(mu, k - 1);
  QSeries out = shifted_into(poly, mu.size(), N);
  for (int j = 2; j <= k; ++j) out.div_one_minus(j);
  return out;
}

std::int64_t min_degree_poly(const Partition& mu) { return weighted_size(mu); }

std::int64_t min_degree_bound(const Partition& mu, const Partition& tau) {
  const std::int64_t t = tau.size();
  const std::int64_t twice = 3 * t * t + t;
  if (twice % 2 != 0) throw std::logic_error("degree bound is not an integer");
  return min_degree_poly(mu) - static_cast<std::int64_t>(mu.length()) * t - twice / 2;
}

VermaTable character_table_of_verma(const Partition& tau, int size_bound, int N, const std::optional<ExactPoint>& pt,
                                    int cap) {
  VermaTable out;
  const auto mus = partitions_up_to(size_bound);
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<QSeries> series(mus.size());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < mus.size(); i += workers) series[i] = verma_char_component(mus[i], tau, N, cap);
    }));
  for (auto& job : jobs) job.get();
  for (std::size_t i = 0; i < mus.size(); ++i) out.components.emplace(mus[i], series[i]);
  if (pt) out.lowest_weight = h_lowest(tau, pt->c_prime, pt->nu);
  return out;
}

}  // namespace cherednik
