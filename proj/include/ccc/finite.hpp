#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccc/rational.hpp"

namespace ccc {

/// Event in a finite power-set algebra, as a bitmask over atom indices:
/// bit i set means atom i is a member.
using FiniteEvent = std::uint32_t;

/// Enumeration ops refuse algebras above this many atoms unless the caller
/// raises the cap explicitly (the pair scan is 2^n x 2^n).
inline constexpr int kDefaultAtomCap = 12;

/// Hard representation bound for FiniteEvent bitmasks.
inline constexpr int kMaxAtoms = 30;

/// Finite Boolean algebra 2^n with strictly positive rational atom weights
/// summing to exactly 1.
class FiniteAlgebra {
public:
  /// Throws InvalidParameters unless 1 <= n <= kMaxAtoms, every weight is
  /// strictly positive and the weights sum to exactly 1.
  explicit FiniteAlgebra(std::vector<Rational> atom_weights);

  int atom_count() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& atom_weights() const { return weights_; }

  FiniteEvent full_event() const {
    return (FiniteEvent{1} << atom_count()) - 1;
  }

  /// Sum of atom weights over the members of e.
  /// Throws IndexOutOfRange when e references atoms beyond atom_count().
  Rational measure(FiniteEvent e) const;

private:
  std::vector<Rational> weights_;
};

inline Rational finite_measure(const FiniteAlgebra& alg, FiniteEvent e) {
  return alg.measure(e);
}

/// All unordered pairs {a,b} of distinct events with cov(a,b) > 0, listed
/// with a < b by bitmask and ordered lexicographically. Pairs involving the
/// zero or unit event never qualify. Throws AtomCapExceeded above the cap.
std::vector<std::pair<FiniteEvent, FiniteEvent>> positively_correlated_pairs(
    const FiniteAlgebra& alg, int atom_cap = kDefaultAtomCap);

/// Exhaustively tests every event c distinct from a and b with 0 < p(c) < 1
/// against RCCP1-4, in ascending bitmask order, and returns the first hit.
/// Requires cov(a,b) > 0 (NotPositivelyCorrelated).
std::optional<FiniteEvent> search_common_cause(const FiniteAlgebra& alg, FiniteEvent a,
                                               FiniteEvent b);

enum class Verdict { TriviallyCCC, NonTriviallyCCC, NotCCC };

std::string_view to_string(Verdict verdict);

/// One positively correlated pair together with its found cause, if any.
struct Witness {
  FiniteEvent a = 0;
  FiniteEvent b = 0;
  std::optional<FiniteEvent> cause;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// TriviallyCCC: no positively correlated distinct pair exists at all.
/// NonTriviallyCCC: such pairs exist and every one has a common cause.
/// NotCCC: some positively correlated pair has no common cause.
struct Classification {
  Verdict verdict = Verdict::TriviallyCCC;
  std::vector<Witness> witnesses;
};

Classification classify(const FiniteAlgebra& alg, int atom_cap = kDefaultAtomCap);

struct ScanReport {
  int atoms = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  int denominator = 64;
  long long trivially_ccc = 0;
  long long non_trivially_ccc = 0;
  long long not_ccc = 0;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Classifies `samples` random algebras with `atoms` atoms. The weight
/// vectors are integer compositions of `denominator` drawn from a seeded
/// SplitMix64 stream (sample i depends only on (seed, i)); draws containing a
/// zero part are rejected and redrawn, so weights stay strictly positive.
/// Deterministic for fixed (atoms, samples, seed, denominator).
/// Throws InvalidParameters for atoms < 1, samples < 1 or
/// denominator < atoms, and AtomCapExceeded above the cap.
ScanReport scan(int atoms, long long samples, std::uint64_t seed, int denominator = 64,
                int atom_cap = kDefaultAtomCap);

/// Plain-text table: header line with (n, samples, seed, D), one row per
/// verdict. Byte-identical for equal reports.
std::string format_scan_report(const ScanReport& report);

/// Parses an algebra spec: whitespace-separated fractions, the atom weights.
/// Rejects (as ParseError) malformed tokens, non-positive weights and
/// weights that do not sum to exactly 1.
FiniteAlgebra parse_algebra_spec(std::string_view text);

/// "{0,2}" style rendering of the member indices; the zero event prints "{}".
std::string format_finite_event(FiniteEvent e);

}  // namespace ccc
