#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cherednik/partition.hpp"
#include "cherednik/rational.hpp"

namespace cherednik {

// A point with exact coordinates; c' = 1/c is nonzero and nu is not a
// nonnegative integer.
struct ExactPoint {
  Rational c_prime;
  Rational nu;
};
ExactPoint make_exact_point(const Rational& c_prime, const Rational& nu);

// c' = (nu - s) / r with nu generic.
struct GenericOnLine {
  std::int64_t s = 0;
  std::int64_t r = 1;
};
struct FullyGeneric {};
// c = 0.
struct ZeroC {};

using ParamPoint = std::variant<ExactPoint, GenericOnLine, FullyGeneric, ZeroC>;

Rational interp_content(const Partition& mu, const Rational& nu);
Rational h_lowest(const Partition& tau, const Rational& c_prime, const Rational& nu);

// Locus b = c' m + a nu in the (c', nu) plane.
struct Line {
  Partition tau, mu;
  std::int64_t m = 1;
  std::int64_t a = 0;  // |tau| - |mu|
  std::int64_t b = 0;  // f(tau) - f(mu)
  bool empty() const { return tau == mu; }
  bool operator==(const Line&) const = default;
};
Line line_of(const Partition& tau, const Partition& mu, std::int64_t m);

struct LineVerdict {
  enum Kind { Yes, No, Unknown } kind = No;
  std::int64_t s = 0;
  int sign = 0;
};
LineVerdict line_in_B(const Partition& tau, const Partition& mu, std::int64_t m);

std::vector<Partition> degree_one_singular(const Partition& tau, const Rational& c_prime, const Rational& nu);

struct Intersection {
  enum Kind { Disjoint, Point, Coincide } kind = Disjoint;
  Rational c_prime, nu;
};
Intersection intersect_lines(const Line& l1, const Line& l2);

struct CertifiedWitness {
  Partition mu;
  std::int64_t m = 0;
  std::optional<std::int64_t> s, r;  // absent for equal-size degree-one witnesses
  std::string source;                // "line" or "degree-one"
};
struct ChainEntry {
  Partition mu;
  std::int64_t m = 0;
  bool operator<(const ChainEntry& o) const { return mu != o.mu ? mu < o.mu : m < o.m; }
  bool operator==(const ChainEntry&) const = default;
};
struct UnresolvedEntry {
  Partition mu;
  std::int64_t m = 0;
  std::string flag;  // "unknown" or "finite-exception"
};
enum class Verdict { Reducible, SimpleCertified, Unknown };
std::string to_string(Verdict v);

struct PointReport {
  std::vector<CertifiedWitness> certified;
  std::vector<ChainEntry> chain;
  std::vector<UnresolvedEntry> unresolved;
  Verdict verdict = Verdict::Unknown;
};
PointReport classify_point(const Partition& tau, const ParamPoint& pt, int size_bound);

// True when no diagram with more than size_bound cells can give an admissible
// line through the point (c' > 0 only).
bool sizes_beyond_bound_excluded(const Partition& tau, const ExactPoint& pt, int size_bound);

struct LengthResult {
  enum Kind { Finite, Infinite, Unknown } kind = Unknown;
  // For Infinite: s = first + k * step, k >= 0.
  std::int64_t first = 0;
  std::int64_t step = 0;
  std::vector<std::int64_t> sample_s;
  std::vector<Rational> sample_r;  // c (nu - s) for sample_s
  std::vector<Partition> witnesses;  // diagrams mapping into the Verma object
};
std::string to_string(LengthResult::Kind k);
LengthResult length_classification(const Partition& tau, const Rational& c_prime, const Rational& nu);
LengthResult length_classification(const Partition& tau, const ParamPoint& pt);

}  // namespace cherednik
