#include <doctest.h>

#include "cherednik/classical.hpp"
#include "cherednik/symfun.hpp"
#include "oracles.hpp"

using namespace cherednik;

TEST_CASE("e-hooks") {
  auto h = e_hooks(Partition{5, 4, 2, 2}, 7);
  REQUIRE(h.size() == 1);
  CHECK(h[0].vertex == Cell{1, 2});
  CHECK(h[0].leg == 3);
  CHECK(h[0].arm() == 3);
  CHECK(e_hooks(Partition{3, 1, 1, 1}, 7).empty());
  auto col = e_hooks(Partition::column(7), 7);
  REQUIRE(col.size() == 1);
  CHECK(col[0].vertex == Cell{1, 1});
  CHECK(col[0].leg == 6);
  CHECK_THROWS_AS(e_hooks(Partition{1}, 0), DomainError);
}

TEST_CASE("hook removal matches explicit cell surgery") {
  for (const auto& p : partitions_up_to(9))
    for (const auto& [cell, h] : hook_lengths(p)) CHECK(remove_hook(p, cell) == oracle::remove_hook_cells(p, cell));
}

TEST_CASE("classical core") {
  CHECK(classical_core(Partition{5, 4, 2, 2}, 7) == Partition{3, 1, 1, 1});
  CHECK(classical_core(Partition{3, 1, 1, 1}, 7) == Partition{3, 1, 1, 1});
  CHECK(classical_core(Partition{4}, 2) == Partition{});
  // Cores are independent of the removal order: compare against size counting.
  for (const auto& p : partitions_up_to(10))
    for (int e = 1; e <= 5; ++e) {
      Partition c = classical_core(p, e);
      CHECK(e_hooks(c, e).empty());
      CHECK((p.size() - c.size()) % e == 0);
    }
}

TEST_CASE("classical rec") {
  const Partition beta{3, 1, 1, 1};
  CHECK(classical_rec(1, beta, 7) == Partition{7, 4, 1, 1});
  CHECK(classical_rec(5, beta, 7) == Partition{3, 2, 2, 2, 2, 1, 1});
  CHECK(classical_rec(0, beta, 7) == Partition{10, 1, 1, 1});
  CHECK_THROWS_AS(classical_rec(7, beta, 7), DomainError);
  CHECK_THROWS_AS(classical_rec(0, beta, 6), DomainError);
  for (int size = 0; size <= 4; ++size)
    for (const auto& b : partitions_of(size))
      for (int e = size + 1; e <= size + 3; ++e)
        for (int l = 0; l < e; ++l)
          CHECK(oracle::hook_insertions(l, b, e) == std::vector<Partition>{classical_rec(l, b, e)});
}

TEST_CASE("simplicity of classical Vermas") {
  // (3,1,1,1) has six cells, so it is not a diagram for n = 7.
  CHECK_THROWS_AS(verma_simple_classical(Partition{3, 1, 1, 1}, 7, 0), DomainError);
  CHECK(verma_simple_classical(Partition{3, 2, 1, 1}, 7, 0));
  CHECK_FALSE(verma_simple_classical(Partition{4, 1, 1, 1}, 7, 0));
  CHECK_FALSE(verma_simple_classical(Partition{7}, 7, 0));
  CHECK(verma_simple_classical(Partition::column(7), 7, 0));
  CHECK_THROWS_AS(verma_simple_classical(Partition{2, 1}, 3, 0), DomainError);
}

TEST_CASE("block chains") {
  CHECK(block_chain(Partition{}, 4, 0) ==
        std::vector<Partition>{Partition{1, 1, 1, 1}, Partition{2, 1, 1}, Partition{3, 1}, Partition{4}});
  auto chain = block_chain(Partition{1}, 5, 1);
  REQUIRE(chain.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(chain[i].size() == 5);
    CHECK(chain[i] == classical_rec(3 - i, Partition{1}, 4));
  }
}

TEST_CASE("classical graded characters") {
  constexpr int N = 10;
  for (int n = 1; n <= 5; ++n) {
    QSeries expect = QSeries::one(N);
    for (int j = 1; j <= n; ++j) expect.div_one_minus(j);
    CHECK(classical_graded_char(Partition{n}, Partition{n}, n, N) == expect);
  }
  QSeries expect = QSeries::monomial(N, 1);
  expect.div_one_minus(1).div_one_minus(1).div_one_minus(3);
  CHECK(classical_graded_char(Partition{1, 1, 1}, Partition{2, 1}, 3, N) == expect);
  CHECK_THROWS_AS(classical_graded_char(Partition{2}, Partition{2, 1}, 3, N), DomainError);
}

TEST_CASE("hook dimension") {
  CHECK(hook_dimension(Partition{2, 1}) == 2);
  CHECK(hook_dimension(Partition{3, 2}) == 5);
  for (const auto& p : partitions_of(6)) CHECK(hook_dimension(p) == character_value(p, Partition{1, 1, 1, 1, 1, 1}));
}
