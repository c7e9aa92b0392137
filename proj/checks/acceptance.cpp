#include "acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "cherednik/category_o.hpp"
#include "cherednik/classical.hpp"
#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/symfun.hpp"
#include "oracles.hpp"

namespace cherednik::checks {

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string detail(const std::string& extra = "") const {
    std::ostringstream out;
    out << checks_ << " checks, " << failed_ << " failed";
    for (const auto& f : failures_) out << "; " << f;
    if (!extra.empty()) out << "; " << extra;
    return out.str();
  }

 private:
  int checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

using Body = std::function<std::pair<bool, std::string>()>;

CheckResult timed(int id, const std::string& name, const Body& body) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r{id, name, false, "", 0};
  try {
    auto [ok, detail] = body();
    r.passed = ok;
    r.detail = detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

QSeries times_one_minus_q(QSeries s) { return s.mul_one_minus(1); }

// Criterion bodies ---------------------------------------------------------

std::pair<bool, std::string> worked_examples() {
  auto start = std::chrono::steady_clock::now();
  Tally t;
  const Partition tau{8, 5, 4, 3, 3, 2};
  t.expect(core_nu(tau, 22) == Partition{7, 4, 3, 2, 2, 2, 2}, "core s=22");
  t.expect(core_nu(tau, 34) == Partition{9, 8, 5, 4, 3, 3, 2}, "core s=34");
  // j_s = 6 for this tau gives s = 43; 42 is not in C_tau at all.
  const Partition tau2{10, 8, 8, 6, 5, 4, 1};
  t.expect(!c_set_witness(tau2, 42).has_value(), "42 unexpectedly in C_tau");
  t.expect(c_set_witness(tau2, 43) == std::optional<int>(6), "witness of 43");
  t.expect(rec_nu(7, core_nu(tau2, 43)) == Partition{10, 8, 8, 6, 6, 6, 5}, "rec(7, core)");
  const Partition core7 = classical_core(Partition{5, 4, 2, 2}, 7);
  t.expect(core7 == Partition{3, 1, 1, 1}, "classical core_7");
  t.expect(classical_rec(1, core7, 7) == Partition{7, 4, 1, 1}, "classical rec(1)");
  t.expect(classical_rec(5, core7, 7) == Partition{3, 2, 2, 2, 2, 1, 1}, "classical rec(5)");
  t.expect(transpose(Partition{6, 5, 4, 1}) == Partition{4, 3, 3, 3, 2, 1}, "transpose");
  t.expect(tilde(Partition{6, 5, 4, 1}, 31) == Partition{15, 6, 5, 4, 1}, "tilde");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < kRegressionSeconds, "took longer than the regression limit");
  return {t.passed(), t.detail("worked example with j_s=6 evaluated at s=43")};
}

std::pair<bool, std::string> l_empty_identity() {
  Tally t;
  constexpr int N = 12;
  for (int k = 1; k <= 3; ++k)
    for (const auto& mu : partitions_up_to(5)) {
      QSeries euler = simple_char_component(mu, Partition{}, 0, k, N);
      QSeries closed = simple_char_L_empty_closed(mu, k, N);
      t.expect(euler == closed, "k=" + std::to_string(k) + " mu=" + mu.str());
      t.expect(euler.has_nonnegative_integer_coeffs(), "negative coefficient k=" + std::to_string(k) + " mu=" + mu.str());
    }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> verma_oracle() {
  Tally t;
  constexpr int N = 8;
  for (const auto& mu : partitions_up_to(4))
    for (const auto& tau : partitions_up_to(4)) {
      const int n = 2 * (mu.size() + tau.size()) + 10;
      QSeries interpolated = verma_char_component(mu, tau, N);
      QSeries classical = times_one_minus_q(classical_graded_char(tilde(mu, n), tilde(tau, n), n, N));
      t.expect(interpolated == classical, "mu=" + mu.str() + " tau=" + tau.str());
    }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> gamma_identity() {
  Tally t;
  std::mt19937 rng(kGammaSeed);
  const auto taus = partitions_up_to(8);
  for (int c = 0; c < kGammaCases; ++c) {
    const Partition& tau = taus[std::uniform_int_distribution<std::size_t>(0, taus.size() - 1)(rng)];
    const auto members = c_set_members(tau, 40);
    const std::int64_t s = members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
    const std::int64_t l = std::uniform_int_distribution<int>(1, 5)(rng);
    const Partition mu = gamma(tau, s, l).diagram;
    const std::int64_t grow = mu.size() - tau.size();
    t.expect(grow > 0 && s * grow == f_value(mu) - f_value(tau),
             "tau=" + tau.str() + " s=" + std::to_string(s) + " l=" + std::to_string(l));
  }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> compatibility(int max_tau) {
  Tally t;
  for (const auto& tau : partitions_up_to(max_tau))
    for (std::int64_t s : c_set_members(tau, 2 * tau.size() + 6))
      for (int l = 0; l <= 4; ++l) {
        const int n = static_cast<int>(3 * (tau.size() + s) + 5);
        const int e = static_cast<int>(n - s);
        Partition lhs = tilde(rec_nu(l, core_nu(tau, s)), n);
        Partition rhs = classical_rec(l, classical_core(tilde(tau, n), e), e);
        t.expect(lhs == rhs, "tau=" + tau.str() + " s=" + std::to_string(s) + " l=" + std::to_string(l));
      }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> lines() {
  Tally t;
  const Partition empty, one{1}, two{2}, pair{1, 1};
  for (int m = 1; m <= 6; ++m) {
    auto v = line_in_B(empty, one, m);
    t.expect(v.kind == LineVerdict::Yes && v.s == 0 && v.sign == 1, "(empty,(1)," + std::to_string(m) + ")");
    t.expect((line_in_B(empty, two, m).kind == LineVerdict::Yes) == (m % 2 == 0), "(empty,(2)," + std::to_string(m) + ")");
    t.expect(line_in_B(empty, pair, m).kind == LineVerdict::No, "(empty,(1,1)," + std::to_string(m) + ")");
  }
  const auto parts = partitions_up_to(4);
  for (const auto& tau : parts)
    for (const auto& mu : parts) {
      if (tau == mu) continue;
      for (int m1 = 1; m1 <= 5; ++m1)
        for (int m2 = 1; m2 <= 5; ++m2) {
          if (m1 == m2) continue;
          auto x = intersect_lines(line_of(tau, mu, m1), line_of(tau, mu, m2));
          t.expect(x.kind == Intersection::Disjoint, "tau=" + tau.str() + " mu=" + mu.str());
        }
    }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> degree_bounds() {
  Tally t;
  constexpr int N = 10;
  for (const auto& mu : partitions_up_to(5))
    for (const auto& tau : partitions_up_to(3)) {
      QSeries v = verma_char_component(mu, tau, N);
      auto ord = v.ord();
      const std::int64_t bound = min_degree_bound(mu, tau);
      t.expect(!ord || *ord >= bound, "mu=" + mu.str() + " tau=" + tau.str());
      if (tau.empty()) {
        const std::int64_t exact = min_degree_poly(mu);
        if (exact <= N)
          t.expect(ord && *ord == exact, "order for mu=" + mu.str());
        else
          t.expect(!ord, "nonzero below truncation for mu=" + mu.str());
      }
    }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> length() {
  Tally t;
  auto inf = length_classification(Partition{}, Rational(-3, 2), Rational(1, 2));
  t.expect(inf.kind == LengthResult::Infinite, "c=-2/3 kind");
  t.expect(inf.first == 2 && inf.step == 3, "progression");
  t.expect(inf.sample_s == std::vector<std::int64_t>{2, 5, 8}, "first s values");
  t.expect(inf.sample_r == std::vector<Rational>{1, 3, 5}, "first r values");
  for (const auto& tau : partitions_up_to(3))
    for (const Rational& nu : {Rational(1, 2), Rational(-7, 3), Rational(5, 4)})
      t.expect(length_classification(tau, Rational(2), nu).kind == LengthResult::Finite, "c=1/2 finite");
  t.expect(length_classification(Partition{}, Rational(-1), Rational(1, 2)).kind == LengthResult::Unknown, "c=-1");
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> symfun_kernel() {
  Tally t;
  for (int n = 0; n <= 8; ++n) {
    auto table = character_table(n);
    const auto& ps = table->partitions();
    for (const auto& a : ps)
      for (const auto& b : ps) {
        Rational rows = 0, cols = 0;
        for (const auto& rho : ps) rows += Rational(table->value(a, rho) * table->value(b, rho)) / Rational(table->z(rho));
        for (const auto& lam : ps) cols += table->value(lam, a) * table->value(lam, b);
        t.expect(rows == (a == b ? 1 : 0), "row orthogonality n=" + std::to_string(n));
        t.expect(cols == (a == b ? Rational(table->z(a)) : Rational(0)), "column orthogonality n=" + std::to_string(n));
      }
  }
  for (int n = 1; n <= 5; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (const auto& c : ps) {
          Integer g = kronecker(a, b, c);
          bool same = g >= 0 && g == kronecker(a, c, b) && g == kronecker(b, a, c) && g == kronecker(b, c, a) &&
                      g == kronecker(c, a, b) && g == kronecker(c, b, a);
          t.expect(same, "kronecker symmetry " + a.str() + b.str() + c.str());
        }
  }
  const std::set<Partition> support{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}};
  for (const auto& lam : partitions_up_to(4)) {
    Integer g = reduced_kronecker(lam, Partition{1}, Partition{1});
    t.expect(g == (support.count(lam) ? 1 : 0), "reduced (1)(1) at " + lam.str());
  }
  for (const auto& lam : partitions_up_to(5))
    for (int m = 0; m <= 4; ++m) {
      QSeries poly = schur_finite(lam, m);
      auto oracle_poly = oracle::ssyt_polynomial(lam, m);
      bool same = poly.trunc() + 1 == static_cast<int>(oracle_poly.size());
      for (int i = 0; same && i <= poly.trunc(); ++i) same = poly[i] == Rational(oracle_poly[i]);
      t.expect(same, "schur_finite " + lam.str() + " m=" + std::to_string(m));
    }
  return {t.passed(), t.detail()};
}

// Invariant suites ---------------------------------------------------------

std::pair<bool, std::string> partition_invariants() {
  Tally t;
  for (const auto& lam : partitions_up_to(12)) {
    t.expect(transpose(transpose(lam)) == lam, "involution " + lam.str());
    const std::int64_t f = f_value(lam), n = lam.size();
    t.expect(f >= 0 && f <= n * n - n, "f range " + lam.str());
    const bool column = lam.length() == n, row = lam.length() <= 1;
    t.expect((f == 0) == column, "f zero iff column " + lam.str());
    t.expect((f == n * n - n) == row, "f max iff row " + lam.str());
  }
  for (const auto& tau : partitions_up_to(8))
    for (std::int64_t s : c_set_members(tau, 40)) {
      const int js = *c_set_witness(tau, s);
      t.expect(rec_nu(tau.column_length(js), core_nu(tau, s)) == tau, "rec(col, core) " + tau.str());
      for (int l = 1; l <= 5; ++l) {
        Partition mu = gamma(tau, s, l).diagram;
        const std::int64_t grow = mu.size() - tau.size();
        t.expect(grow > 0 && s * grow == f_value(mu) - f_value(tau), "gamma identity " + tau.str());
      }
    }
  for (const auto& tau : partitions_up_to(5)) {
    const int n = 2 * tau.size() + 6;
    auto p = pieri_expand(tau);
    Integer total = Integer(p.corners) * hook_dimension(tilde(tau, n));
    for (const auto* set : {&p.plus, &p.minus, &p.zero})
      for (const auto& mu : *set) total += hook_dimension(tilde(mu, n));
    t.expect(total == Integer(n - 1) * hook_dimension(tilde(tau, n)), "pieri dimension " + tau.str());
  }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> classical_invariants() {
  Tally t;
  for (int size = 0; size <= 5; ++size)
    for (const auto& beta : partitions_of(size))
      for (int e = size + 1; e <= size + 4; ++e)
        for (int l = 0; l < e; ++l) {
          Partition lam = classical_rec(l, beta, e);
          auto hooks = e_hooks(lam, e);
          t.expect(hooks.size() == 1 && classical_core(lam, e) == beta, "round trip " + beta.str());
          if (size + e <= 9) t.expect(oracle::hook_insertions(l, beta, e) == std::vector<Partition>{lam}, "unique insertion");
        }
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& tau : partitions_of(n)) {
        QSeries g = classical_graded_char(mu, tau, n, 8);
        t.expect(g.has_nonnegative_integer_coeffs() && g[0] == (mu == tau ? 1 : 0), "graded char " + mu.str() + tau.str());
      }
  auto c6 = compatibility(6);
  t.expect(c6.first, "compatibility up to size 6: " + c6.second);
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> symfun_invariants() {
  Tally t;
  const auto small = partitions_up_to(3);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        if (b < c) continue;
        Integer g = reduced_kronecker(a, b, c);
        t.expect(g == reduced_kronecker(a, c, b) && g == reduced_kronecker(b, a, c) && g == reduced_kronecker(c, b, a),
                 "reduced symmetry " + a.str() + b.str() + c.str());
      }
  constexpr int N = 6;
  for (const auto& lam : partitions_up_to(4)) {
    const int n = lam.size() + lam.part(1) + N;
    QSeries big = schur_principal(tilde(lam, n), N);
    // s_{tilde}(1,q,...) approaches q^{|lambda|} s_lambda / prod(1-q^j) up to q^N.
    t.expect(big == schur_bar(lam, N), "principal limit " + lam.str());
  }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> params_invariants() {
  Tally t;
  const auto parts = partitions_up_to(7);
  for (const auto& tau : parts)
    for (const auto& mu : parts) {
      if (tau == mu || tau.size() == mu.size()) continue;
      for (int m = 1; m <= 6; ++m) {
        auto v = line_in_B(tau, mu, m);
        if (v.kind != LineVerdict::Yes) continue;
        const std::int64_t grow = mu.size() - tau.size();
        const bool shape = c_set_witness(tau, v.s) && tau.column_length(*c_set_witness(tau, v.s)) + v.sign >= 0 &&
                           gamma(tau, v.s, v.sign).diagram == mu;
        t.expect(shape, "gamma witness " + tau.str() + "->" + mu.str());
        t.expect(v.s * grow == f_value(mu) - f_value(tau), "slope " + tau.str() + "->" + mu.str());
        // A point on the line: nu = 1/3 gives c' from the line equation.
        Line ln = line_of(tau, mu, m);
        const Rational nu(1, 3);
        const Rational cp = (Rational(ln.b) - Rational(ln.a) * nu) / m;
        t.expect(cp * Rational(m) / grow == nu - v.s, "point on line " + tau.str() + "->" + mu.str());
      }
    }
  for (const auto& tau : partitions_up_to(5))
    for (const auto& mu : partitions_up_to(5)) {
      if (tau == mu) continue;
      for (int m1 = 1; m1 <= 6; ++m1)
        for (int m2 = m1 + 1; m2 <= 6; ++m2)
          t.expect(intersect_lines(line_of(tau, mu, m1), line_of(tau, mu, m2)).kind == Intersection::Disjoint,
                   "disjoint " + tau.str() + mu.str());
    }
  const std::vector<Rational> grid{Rational(-5, 2), Rational(-1), Rational(-1, 3), Rational(1, 2), Rational(2),
                                   Rational(3), Rational(7, 2)};
  for (const auto& tau : partitions_up_to(3))
    for (const auto& cp : grid)
      for (const auto& nu : grid) {
        if (is_integer(nu) && nu >= 0) continue;
        PointReport rep = classify_point(tau, ExactPoint{cp, nu}, 5);
        for (const auto& mu : degree_one_singular(tau, cp, nu)) {
          bool found = false;
          for (const auto& w : rep.certified) found |= w.mu == mu && w.m == 1;
          t.expect(found, "degree-one witness " + mu.str());
        }
        PointReport smaller = classify_point(tau, ExactPoint{cp, nu}, 3);
        if (smaller.verdict == Verdict::Reducible) t.expect(rep.verdict == Verdict::Reducible, "monotone bound");
      }
  // Points on contained lines of the empty diagram.
  for (int s = 0; s <= 4; ++s)
    for (int r = 1; r <= 3; ++r) {
      const Rational nu(-1, 2);
      const Rational cp = (nu - s) / r;
      PointReport rep = classify_point(Partition{}, ExactPoint{cp, nu}, 5);
      t.expect(rep.verdict == Verdict::Reducible, "contained line point");
    }
  for (const auto& [cp, nu] : std::vector<std::pair<Rational, Rational>>{
           {Rational(-3, 2), Rational(1, 2)}, {Rational(-1, 2), Rational(-3, 4)}, {Rational(-2), Rational(5, 3)}}) {
    auto res = length_classification(Partition{}, cp, nu);
    if (res.kind != LengthResult::Infinite) continue;
    for (std::size_t k = 0; k < res.sample_s.size(); ++k) {
      const std::int64_t s = res.sample_s[k];
      t.expect(c_set_witness(Partition{}, s).has_value(), "s in C_empty");
      const Partition mu = gamma(Partition{}, s, 1).diagram;
      const std::int64_t r = to_int64(res.sample_r[k]);
      t.expect(line_in_B(Partition{}, mu, r * mu.size()).kind == LineVerdict::Yes, "row witness line");
    }
  }
  return {t.passed(), t.detail()};
}

std::pair<bool, std::string> category_invariants() {
  Tally t;
  for (const auto& tau : partitions_up_to(4))
    for (std::int64_t s : c_set_members(tau, 6))
      for (int sign : {1, -1}) {
        const int js = *c_set_witness(tau, s);
        if (sign < 0 && tau.column_length(js) == 0) continue;
        for (std::int64_t r : {1, 2, 3}) {
          Resolution res = resolution(tau, s, sign, sign * r, 4);
          t.expect(res.terms.front().diagram == tau && res.offsets.front() == 0, "resolution start");
          for (std::size_t l = 1; l < res.terms.size(); ++l)
            t.expect(res.offsets[l] - res.offsets[l - 1] ==
                         sign * r * (res.terms[l].diagram.size() - res.terms[l - 1].diagram.size()),
                     "offset step " + tau.str());
        }
      }
  for (const auto& mu : partitions_up_to(3))
    for (const auto& tau : partitions_up_to(3)) {
      QSeries v = verma_char_component(mu, tau, 8);
      t.expect(v.has_nonnegative_integer_coeffs() && v[0] == (mu == tau ? 1 : 0), "verma constant term");
      // Beyond the vanishing bound the coefficients are zero.
      for (const auto& lam : partitions_of(mu.size() + tau.size() + 1))
        if (weighted_size(lam) <= 8) t.expect(reduced_kronecker(lam, tau, mu) == 0, "vanishing bound");
    }
  return {t.passed(), t.detail()};
}

}  // namespace

CheckResult run_criterion(int id) {
  switch (id) {
    case 1:
      return timed(1, "worked-example regression", worked_examples);
    case 2:
      return timed(2, "L(empty) Euler sum equals closed form", l_empty_identity);
    case 3:
      return timed(3, "Verma character oracle", verma_oracle);
    case 4:
      return timed(4, "Gamma identity, random cases", gamma_identity);
    case 5:
      return timed(5, "rec/core compatibility with classical", [] { return compatibility(5); });
    case 6:
      return timed(6, "line classification", lines);
    case 7:
      return timed(7, "degree bounds", degree_bounds);
    case 8:
      return timed(8, "length classification", length);
    case 9:
      return timed(9, "symmetric-function kernel", symfun_kernel);
    default:
      return {id, "unknown criterion", false, "no such criterion", 0};
  }
}

std::vector<CheckResult> run_criteria() {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id));
  return out;
}

std::vector<CheckResult> run_invariant_suites() {
  return {timed(0, "partitions invariants", partition_invariants),
          timed(0, "classical invariants", classical_invariants),
          timed(0, "symfun invariants", symfun_invariants),
          timed(0, "params invariants", params_invariants),
          timed(0, "catO invariants", category_invariants)};
}

std::string format_line(const CheckResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " ";
  if (r.id > 0)
    out << "criterion " << r.id;
  else
    out << "suite";
  out << " [" << r.name << "] (" << static_cast<long>(r.seconds * 1000) << " ms) " << r.detail;
  return out.str();
}

}  // namespace cherednik::checks
