#include <doctest.h>

#include "cherednik/category_o.hpp"
#include "cherednik/classical.hpp"

using namespace cherednik;

namespace {

QSeries coeffs(int trunc, std::vector<int> c) {
  std::vector<Rational> q(c.begin(), c.end());
  q.resize(trunc + 1);
  return QSeries(trunc, q);
}

// prod_{j=2..k} 1/(1-q^j)
QSeries inverse_product(int trunc, int from, int to) {
  QSeries s = QSeries::one(trunc);
  for (int j = from; j <= to; ++j) s.div_one_minus(j);
  return s;
}

}  // namespace

TEST_CASE("Verma components for the empty lowest weight") {
  constexpr int N = 10;
  QSeries one = QSeries::monomial(N, 1) * QSeries::euler_inverse(N, 2);
  one.div_one_minus(1);
  CHECK(verma_char_component(Partition{1}, Partition{}, N) == one);
  CHECK(verma_char_component(Partition{}, Partition{}, 6) == coeffs(6, {1, 0, 1, 1, 2, 2, 4}));
  for (const auto& mu : partitions_up_to(3)) CHECK(verma_char_component(mu, mu, 6)[0] == 1);
}

TEST_CASE("Verma components match the finite-rank oracle") {
  constexpr int N = 6;
  for (const auto& mu : partitions_up_to(2))
    for (const auto& tau : partitions_up_to(2)) {
      const int n = 2 * (mu.size() + tau.size()) + N + 2;
      QSeries classical = classical_graded_char(tilde(mu, n), tilde(tau, n), n, N);
      classical.mul_one_minus(1);
      CHECK(verma_char_component(mu, tau, N) == classical);
    }
}

TEST_CASE("Verma table") {
  VermaTable t = character_table_of_verma(Partition{}, 1, 5);
  REQUIRE(t.components.size() == 2);
  CHECK(t.components.at(Partition{}) == coeffs(5, {1, 0, 1, 1, 2, 2}));
  CHECK(t.components.at(Partition{1}) == coeffs(5, {0, 1, 1, 2, 3, 5}));
  CHECK_FALSE(t.lowest_weight.has_value());
  VermaTable w = character_table_of_verma(Partition{1}, 2, 4, make_exact_point(2, 5 + Rational(1, 2)));
  REQUIRE(w.lowest_weight.has_value());
  CHECK(*w.lowest_weight == h_lowest(Partition{1}, 2, 5 + Rational(1, 2)));
  CHECK(w.components.at(Partition{1})[0] == 1);
}

TEST_CASE("resolutions") {
  Resolution cols = resolution(Partition{}, 0, 1, 3, 4);
  REQUIRE(cols.terms.size() == 5);
  for (int l = 0; l <= 4; ++l) {
    CHECK(cols.terms[l].diagram == Partition::column(l));
    CHECK(cols.offsets[l] == 3 * l);
  }
  Resolution r21 = resolution(Partition{2, 1}, 1, 1, 1, 3);
  CHECK(r21.terms[1].diagram == Partition{2, 1, 1});
  CHECK(r21.terms[2].diagram == Partition{2, 1, 1, 1});
  CHECK(r21.offsets == std::vector<std::int64_t>{0, 1, 2, 3});
  Resolution r2 = resolution(Partition{}, 2, 1, 1, 3);
  CHECK(r2.terms[1].diagram == Partition{3});
  CHECK(r2.terms[2].diagram == Partition{3, 1});
  CHECK(r2.terms[3].diagram == Partition{3, 1, 1});
  CHECK(r2.offsets == std::vector<std::int64_t>{0, 3, 4, 5});
  // Negative direction stops at the column length.
  Resolution neg = resolution(Partition{2, 2}, 2, -1, -1, 10);
  REQUIRE(neg.terms.size() == 3);
  CHECK(neg.terms[2].diagram.size() < neg.terms[1].diagram.size());
  CHECK_THROWS_AS(resolution(Partition{}, 0, 1, -1, 3), DomainError);
  CHECK_THROWS_AS(resolution(Partition{2, 1}, 2, 1, 1, 3), DomainError);
}

TEST_CASE("simple characters of L(empty)") {
  constexpr int N = 12;
  CHECK(simple_char_component(Partition{}, Partition{}, 0, 1, N) == QSeries::one(N));
  for (const auto& mu : partitions_up_to(3))
    if (!mu.empty()) CHECK(simple_char_component(mu, Partition{}, 0, 1, N).is_zero());
  QSeries odd = QSeries::monomial(N, 1);
  odd.div_one_minus(2);
  CHECK(simple_char_component(Partition{1}, Partition{}, 0, 2, N) == odd);
  CHECK(simple_char_L_empty_closed(Partition{1}, 2, N) == odd);
  CHECK(simple_char_L_empty_closed(Partition{1, 1}, 2, N).is_zero());
  CHECK(simple_char_component(Partition{1, 1}, Partition{}, 0, 2, N).is_zero());
  for (int k = 1; k <= 4; ++k) CHECK(simple_char_L_empty_closed(Partition{}, k, N) == inverse_product(N, 2, k));
  for (int k = 1; k <= 3; ++k)
    for (const auto& mu : partitions_up_to(4)) {
      QSeries euler = simple_char_component(mu, Partition{}, 0, k, N);
      CHECK(euler == simple_char_L_empty_closed(mu, k, N));
      CHECK(euler.has_nonnegative_integer_coeffs());
      if (mu.length() >= k) CHECK(euler.is_zero());
    }
}

TEST_CASE("degree bounds") {
  CHECK(min_degree_poly(Partition{2, 1}) == 4);
  CHECK(min_degree_poly(Partition{}) == 0);
  for (int k = 1; k <= 5; ++k) CHECK(min_degree_poly(Partition::column(k)) == k * (k + 1) / 2);
  for (const auto& mu : partitions_up_to(4)) CHECK(min_degree_bound(mu, Partition{}) == min_degree_poly(mu));
  CHECK(min_degree_bound(Partition{2, 1}, Partition{1}) == 0);
  for (const auto& tau : partitions_up_to(4)) CHECK(min_degree_bound(Partition{}, tau) <= 0);
}
