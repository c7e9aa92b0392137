#include "cherednik/params.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cherednik/category_o.hpp"

namespace cherednik {

ExactPoint make_exact_point(const Rational& c_prime, const Rational& nu) {
  if (c_prime == 0) throw DomainError("c' must be nonzero");
  if (is_integer(nu) && nu >= 0) throw DomainError("nu must not be a nonnegative integer");
  return {c_prime, nu};
}

Rational interp_content(const Partition& mu, const Rational& nu) {
  const Rational m(mu.size());
  return (nu - m) * (nu - m - 1) / 2 - m + Rational(content(mu));
}

Rational h_lowest(const Partition& tau, const Rational& c_prime, const Rational& nu) {
  if (c_prime == 0) throw DomainError("c' must be nonzero");
  return (nu - 1) / 2 - interp_content(tau, nu) / c_prime;
}

Line line_of(const Partition& tau, const Partition& mu, std::int64_t m) {
  if (m < 1) throw DomainError("m must be positive");
  return {tau, mu, m, tau.size() - mu.size(), f_value(tau) - f_value(mu)};
}

static bool gamma_step_matches(const Partition& from, std::int64_t s, const Partition& to) {
  if (!c_set_witness(from, s)) return false;
  return gamma(from, s, 1).diagram == to;
}

LineVerdict line_in_B(const Partition& tau, const Partition& mu, std::int64_t m) {
  if (tau == mu) throw DomainError("mu must differ from tau");
  if (m < 1) throw DomainError("m must be positive");
  if (mu.size() != tau.size()) {
    const std::int64_t dsize = mu.size() - tau.size();
    const std::int64_t df = f_value(mu) - f_value(tau);
    if (df % dsize != 0) return {};
    const std::int64_t s = df / dsize;
    if (m % dsize != 0) return {};
    // The smaller diagram is the source of the elementary step.
    const bool ok = dsize > 0 ? gamma_step_matches(tau, s, mu) : gamma_step_matches(mu, s, tau);
    if (!ok) return {};
    return {LineVerdict::Yes, s, dsize > 0 ? 1 : -1};
  }
  const std::int64_t dct = content(tau) - content(mu);
  if (dct == 0) return {};
  const std::int64_t d = std::gcd(dct, m);
  if (2 * d != dct && std::abs(dct / d) > tau.size()) return {};
  return {LineVerdict::Unknown, 0, 0};
}

std::vector<Partition> degree_one_singular(const Partition& tau, const Rational& c_prime, const Rational& nu) {
  if (c_prime == 0) throw DomainError("c' must be nonzero");
  auto p = pieri_expand(tau);
  std::set<Partition> all;
  all.insert(p.plus.begin(), p.plus.end());
  all.insert(p.minus.begin(), p.minus.end());
  all.insert(p.zero.begin(), p.zero.end());
  std::vector<Partition> out;
  for (const auto& mu : all) {
    const Rational lhs(f_value(tau) - f_value(mu));
    if (lhs == c_prime + Rational(tau.size() - mu.size()) * nu) out.push_back(mu);
  }
  return out;
}

Intersection intersect_lines(const Line& l1, const Line& l2) {
  if (l1.empty() || l2.empty()) throw DomainError("empty line");
  // m c' + a nu = b
  const Integer det = Integer(l1.m) * l2.a - Integer(l2.m) * l1.a;
  if (det != 0) {
    Rational cp = Rational(Integer(l1.b) * l2.a - Integer(l2.b) * l1.a, det);
    Rational nu = Rational(Integer(l1.m) * l2.b - Integer(l2.m) * l1.b, det);
    cp.canonicalize();
    nu.canonicalize();
    // c' = 0 is not a point of the plane.
    if (cp == 0) return {Intersection::Disjoint, 0, 0};
    return {Intersection::Point, cp, nu};
  }
  // Rows are proportional on the left; compare the right-hand sides.
  const bool same = Integer(l1.m) * l2.b == Integer(l2.m) * l1.b && Integer(l1.a) * l2.b == Integer(l2.a) * l1.b;
  return {same ? Intersection::Coincide : Intersection::Disjoint, 0, 0};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Reducible:
      return "Reducible";
    case Verdict::SimpleCertified:
      return "SimpleCertified";
    default:
      return "Unknown";
  }
}

std::string to_string(LengthResult::Kind k) {
  switch (k) {
    case LengthResult::Finite:
      return "Finite";
    case LengthResult::Infinite:
      return "Infinite";
    default:
      return "Unknown";
  }
}

namespace {

bool in_pieri(const Partition& tau, const Partition& mu) {
  auto p = pieri_expand(tau);
  return p.plus.count(mu) || p.minus.count(mu) || p.zero.count(mu);
}

void add_chain(const Partition& tau, std::int64_t s, std::int64_t r, int size_bound, std::set<ChainEntry>& chain) {
  auto js = c_set_witness(tau, s);
  if (!js) return;
  const int sign = r > 0 ? 1 : -1;
  const std::int64_t last = sign > 0 ? size_bound : tau.column_length(*js);
  for (std::int64_t l = 2; l <= last; ++l) {
    Partition g = gamma(tau, s, sign * l).diagram;
    if (sign > 0 && g.size() > size_bound) break;
    chain.insert({g, r * (g.size() - tau.size())});
  }
}

std::vector<ChainEntry> sorted(const std::set<ChainEntry>& chain) { return {chain.begin(), chain.end()}; }

PointReport classify_exact(const Partition& tau, const ExactPoint& pt, int size_bound) {
  PointReport rep;
  std::set<ChainEntry> chain;
  const std::int64_t t = tau.size();
  for (const auto& mu : partitions_up_to(size_bound)) {
    if (mu == tau) continue;
    const std::int64_t msize = mu.size();
    const Rational a(t - msize), b(f_value(tau) - f_value(mu));
    const Rational mq = (b - a * pt.nu) / pt.c_prime;
    if (!is_integer(mq) || mq <= 0) continue;
    const std::int64_t m = to_int64(mq);
    if (m < std::abs(msize - t)) continue;
    if (m < min_degree_bound(mu, tau)) continue;

    if (m == 1 && in_pieri(tau, mu)) {
      // The degree-one criterion is exact, so this witness needs no line argument.
      CertifiedWitness w{mu, m, std::nullopt, std::nullopt, "degree-one"};
      if (msize != t) {
        auto v = line_in_B(tau, mu, m);
        if (v.kind != LineVerdict::Yes) throw std::logic_error("degree-one witness on a line outside B");
        w.s = v.s;
        w.r = m / (msize - t);
      }
      rep.certified.push_back(w);
      continue;
    }
    auto v = line_in_B(tau, mu, m);
    if (v.kind == LineVerdict::Yes) {
      const std::int64_t r = m / (msize - t);
      rep.certified.push_back({mu, m, v.s, r, "line"});
      add_chain(tau, v.s, r, size_bound, chain);
    } else {
      rep.unresolved.push_back({mu, m, v.kind == LineVerdict::Unknown ? "unknown" : "finite-exception"});
    }
  }
  rep.chain = sorted(chain);
  if (!rep.certified.empty())
    rep.verdict = Verdict::Reducible;
  else if (rep.unresolved.empty() && sizes_beyond_bound_excluded(tau, pt, size_bound))
    rep.verdict = Verdict::SimpleCertified;
  else
    rep.verdict = Verdict::Unknown;
  return rep;
}

PointReport classify_generic_line(const Partition& tau, const GenericOnLine& g, int size_bound) {
  if (g.r == 0) throw DomainError("r must be nonzero");
  PointReport rep;
  rep.verdict = Verdict::SimpleCertified;
  auto js = c_set_witness(tau, g.s);
  const int sign = g.r > 0 ? 1 : -1;
  if (!js || tau.column_length(*js) + sign < 0) return rep;
  Partition mu = gamma(tau, g.s, sign).diagram;
  const std::int64_t m = std::abs(g.r) * std::abs(mu.size() - tau.size());
  auto v = line_in_B(tau, mu, m);
  if (v.kind != LineVerdict::Yes) return rep;
  rep.certified.push_back({mu, m, v.s, g.r, "line"});
  std::set<ChainEntry> chain;
  add_chain(tau, g.s, g.r, size_bound, chain);
  rep.chain = sorted(chain);
  rep.verdict = Verdict::Reducible;
  return rep;
}

}  // namespace

bool sizes_beyond_bound_excluded(const Partition& tau, const ExactPoint& pt, int size_bound) {
  const Rational c = 1 / pt.c_prime;
  if (c <= 0) return false;
  const Rational t(tau.size()), ft(f_value(tau)), nu = pt.nu;
  // Largest possible m for diagrams of size M, using f >= 0.
  auto pieri_excluded = [&](const Rational& M) {
    const Rational upper = c * (ft + (M - t) * nu);
    Rational need = M > t ? M - t : t - M;
    if (need < 1) need = 1;
    return upper < need;
  };
  // Lower bound of (degree bound - m) over all diagrams of size M.
  auto degree_gap = [&](const Rational& M) -> Rational {
    Rational spread = M;
    if (c > 1) spread = c * M - (c - 1) * M * (M + 1) / 2;
    return c * (M * M - M) / 2 + spread - M * t - (3 * t * t + t) / 2 - c * ft - c * (M - t) * nu;
  };
  Rational alpha(1, 2);
  if (c <= 1) alpha = c / 2;
  const Rational beta = degree_gap(1) - degree_gap(0) - alpha;
  const Rational vertex = -beta / (2 * alpha);
  for (std::int64_t M = size_bound + 1; M < size_bound + 1000000; ++M) {
    const Rational Mq(M);
    const Rational gap = degree_gap(Mq);
    if (Mq >= vertex && gap > 0) return true;
    if (!pieri_excluded(Mq) && gap <= 0) return false;
  }
  return false;
}

PointReport classify_point(const Partition& tau, const ParamPoint& pt, int size_bound) {
  if (size_bound < 0) throw DomainError("negative size bound");
  if (auto* e = std::get_if<ExactPoint>(&pt)) {
    // nu in Z_+ is refused by make_exact_point; the line arithmetic itself only needs c' != 0.
    if (e->c_prime == 0) throw DomainError("c' must be nonzero");
    return classify_exact(tau, *e, size_bound);
  }
  if (auto* g = std::get_if<GenericOnLine>(&pt)) return classify_generic_line(tau, *g, size_bound);
  PointReport rep;
  rep.verdict = Verdict::SimpleCertified;
  return rep;
}

LengthResult length_classification(const Partition& tau, const Rational& c_prime, const Rational& nu) {
  make_exact_point(c_prime, nu);
  LengthResult out;
  const Rational c = 1 / c_prime;
  if (c > 0) {
    out.kind = LengthResult::Finite;
    return out;
  }
  if (!tau.empty()) return out;
  // c (nu - s) changes by the integer numerator of -c when s grows by its
  // denominator, so integrality is periodic with that period.
  const std::int64_t period = to_int64(Integer(c.get_den()));
  std::vector<std::int64_t> residues;
  for (std::int64_t s = 0; s < period; ++s)
    if (is_integer(c * (nu - s))) residues.push_back(s);
  if (residues.empty()) return out;
  if (residues.size() != 1) throw std::logic_error("integrality is not a single residue class");
  std::int64_t first = residues.front();
  while (c * (nu - first) <= 0) first += period;
  out.kind = LengthResult::Infinite;
  out.first = first;
  out.step = period;
  for (int k = 0; k < 3; ++k) {
    const std::int64_t s = first + k * period;
    out.sample_s.push_back(s);
    out.sample_r.push_back(c * (nu - s));
    out.witnesses.push_back(gamma(tau, s, 1).diagram);
  }
  return out;
}

LengthResult length_classification(const Partition& tau, const ParamPoint& pt) {
  if (auto* e = std::get_if<ExactPoint>(&pt)) return length_classification(tau, e->c_prime, e->nu);
  LengthResult out;
  out.kind = LengthResult::Finite;
  return out;
}

}  // namespace cherednik
