#include "ccc/finite.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "ccc/errors.hpp"
#include "ccc/rng.hpp"

namespace ccc {

FiniteAlgebra::FiniteAlgebra(std::vector<Rational> atom_weights)
    : weights_(std::move(atom_weights)) {
  if (weights_.empty()) {
    throw InvalidParameters("finite algebra needs at least one atom");
  }
  if (static_cast<int>(weights_.size()) > kMaxAtoms) {
    throw InvalidParameters("finite algebra limited to " + std::to_string(kMaxAtoms) +
                            " atoms, got " + std::to_string(weights_.size()));
  }
  Rational sum{0};
  for (const Rational& w : weights_) {
    if (w <= 0) {
      throw InvalidParameters("atom weights must be strictly positive, got " +
                              format_rational(w));
    }
    sum += w;
  }
  if (sum != 1) {
    throw InvalidParameters("atom weights must sum to 1, got " + format_rational(sum));
  }
}

Rational FiniteAlgebra::measure(FiniteEvent e) const {
  if (e >> atom_count()) {
    throw IndexOutOfRange("event " + format_finite_event(e) + " references atoms beyond " +
                          std::to_string(atom_count()));
  }
  Rational total{0};
  for (int i = 0; i < atom_count(); ++i) {
    if (e & (FiniteEvent{1} << i)) total += weights_[i];
  }
  return total;
}

namespace {

void check_cap(const FiniteAlgebra& alg, int atom_cap) {
  if (alg.atom_count() > atom_cap) {
    throw AtomCapExceeded("enumeration capped at " + std::to_string(atom_cap) +
                          " atoms, algebra has " + std::to_string(alg.atom_count()));
  }
}

// Measure of every subset, indexed by bitmask.
std::vector<Rational> measure_table(const FiniteAlgebra& alg) {
  const std::size_t count = std::size_t{1} << alg.atom_count();
  std::vector<Rational> m(count);
  for (std::size_t s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    m[s] = m[s & (s - 1)] + alg.atom_weights()[low];
  }
  return m;
}

// RCCP1-4 for candidate cause c, cross-multiplied to avoid divisions.
// Requires 0 < m(c) < 1.
template <typename MeasureFn>
bool satisfies_rccp(const MeasureFn& m, FiniteEvent a, FiniteEvent b, FiniteEvent c) {
  const Rational pc = m(c);
  const Rational pcp = 1 - pc;
  const Rational pac = m(a & c);
  const Rational pbc = m(b & c);
  const Rational pabc = m(a & b & c);
  const Rational pacp = m(a) - pac;
  const Rational pbcp = m(b) - pbc;
  const Rational pabcp = m(a & b) - pabc;
  return pabc * pc == pac * pbc &&          // RCCP1
         pabcp * pcp == pacp * pbcp &&      // RCCP2
         pac * pcp > pacp * pc &&           // RCCP3
         pbc * pcp > pbcp * pc;             // RCCP4
}

template <typename MeasureFn>
std::optional<FiniteEvent> search_generic(const MeasureFn& m, FiniteEvent a, FiniteEvent b,
                                          FiniteEvent full) {
  for (FiniteEvent c = 0; c <= full; ++c) {
    if (c == a || c == b) continue;
    if (m(c) == 0 || m(c) == 1) continue;
    if (satisfies_rccp(m, a, b, c)) return c;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<FiniteEvent, FiniteEvent>> positively_correlated_pairs(
    const FiniteAlgebra& alg, int atom_cap) {
  check_cap(alg, atom_cap);
  const std::vector<Rational> m = measure_table(alg);
  const FiniteEvent full = alg.full_event();
  std::vector<std::pair<FiniteEvent, FiniteEvent>> pairs;
  for (FiniteEvent a = 0; a <= full; ++a) {
    for (FiniteEvent b = a + 1; b <= full; ++b) {
      if (m[a & b] - m[a] * m[b] > 0) {
        pairs.emplace_back(a, b);
      }
    }
  }
  return pairs;
}

std::optional<FiniteEvent> search_common_cause(const FiniteAlgebra& alg, FiniteEvent a,
                                               FiniteEvent b) {
  const auto m = [&alg](FiniteEvent e) { return alg.measure(e); };
  if (m(a & b) - m(a) * m(b) <= 0) {
    throw NotPositivelyCorrelated("pair " + format_finite_event(a) + ", " +
                                  format_finite_event(b) + " is not positively correlated");
  }
  return search_generic(m, a, b, alg.full_event());
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::TriviallyCCC: return "TriviallyCCC";
    case Verdict::NonTriviallyCCC: return "NonTriviallyCCC";
    case Verdict::NotCCC: return "NotCCC";
  }
  return "?";
}

Classification classify(const FiniteAlgebra& alg, int atom_cap) {
  check_cap(alg, atom_cap);
  const std::vector<Rational> m = measure_table(alg);
  const FiniteEvent full = alg.full_event();
  const auto lookup = [&m](FiniteEvent e) -> const Rational& { return m[e]; };
  Classification result;
  bool missing_cause = false;
  for (FiniteEvent a = 0; a <= full; ++a) {
    for (FiniteEvent b = a + 1; b <= full; ++b) {
      if (m[a & b] - m[a] * m[b] <= 0) continue;
      Witness w{a, b, search_generic(lookup, a, b, full)};
      missing_cause = missing_cause || !w.cause.has_value();
      result.witnesses.push_back(std::move(w));
    }
  }
  if (result.witnesses.empty()) {
    result.verdict = Verdict::TriviallyCCC;
  } else {
    result.verdict = missing_cause ? Verdict::NotCCC : Verdict::NonTriviallyCCC;
  }
  return result;
}

namespace {

// One weight vector: a uniform composition of `denominator` into `atoms`
// parts, redrawn until every part is positive.
std::vector<Rational> sample_weights(SplitMix64& rng, int atoms, int denominator) {
  std::vector<int> cuts(atoms - 1);
  std::vector<int> parts(atoms);
  for (;;) {
    for (int& c : cuts) {
      c = static_cast<int>(rng.below(static_cast<std::uint64_t>(denominator) + 1));
    }
    std::sort(cuts.begin(), cuts.end());
    bool positive = true;
    int prev = 0;
    for (int i = 0; i < atoms; ++i) {
      const int next = i + 1 < atoms ? cuts[i] : denominator;
      parts[i] = next - prev;
      positive = positive && parts[i] > 0;
      prev = next;
    }
    if (positive) break;
  }
  std::vector<Rational> weights;
  weights.reserve(atoms);
  for (int p : parts) {
    weights.push_back(Rational(p, denominator));
  }
  return weights;
}

}  // namespace

ScanReport scan(int atoms, long long samples, std::uint64_t seed, int denominator,
                int atom_cap) {
  if (atoms < 1 || samples < 1 || denominator < atoms) {
    throw InvalidParameters(
        "scan needs atoms >= 1, samples >= 1 and denominator >= atoms");
  }
  if (atoms > atom_cap) {
    throw AtomCapExceeded("enumeration capped at " + std::to_string(atom_cap) +
                          " atoms, scan asked for " + std::to_string(atoms));
  }
  ScanReport report;
  report.atoms = atoms;
  report.samples = samples;
  report.seed = seed;
  report.denominator = denominator;
  for (long long i = 0; i < samples; ++i) {
    SplitMix64 rng(SplitMix64::stream_seed(seed, static_cast<std::uint64_t>(i)));
    const FiniteAlgebra alg(sample_weights(rng, atoms, denominator));
    switch (classify(alg, atom_cap).verdict) {
      case Verdict::TriviallyCCC: ++report.trivially_ccc; break;
      case Verdict::NonTriviallyCCC: ++report.non_trivially_ccc; break;
      case Verdict::NotCCC: ++report.not_ccc; break;
    }
  }
  return report;
}

std::string format_scan_report(const ScanReport& report) {
  std::string out = "finite-scan n=" + std::to_string(report.atoms) +
                    " samples=" + std::to_string(report.samples) +
                    " seed=" + std::to_string(report.seed) +
                    " D=" + std::to_string(report.denominator) + "\n";
  const auto row = [&out](std::string_view name, long long count) {
    std::string padded(name);
    padded.resize(16, ' ');
    out += padded + std::to_string(count) + "\n";
  };
  row(to_string(Verdict::TriviallyCCC), report.trivially_ccc);
  row(to_string(Verdict::NonTriviallyCCC), report.non_trivially_ccc);
  row(to_string(Verdict::NotCCC), report.not_ccc);
  return out;
}

FiniteAlgebra parse_algebra_spec(std::string_view text) {
  std::vector<Rational> weights;
  std::size_t pos = 0;
  Rational sum{0};
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    const Rational w = detail::parse_rational_token(text.substr(pos, end - pos), pos);
    if (w <= 0) {
      throw ParseError("atom weight " + format_rational(w) + " is not strictly positive",
                       pos);
    }
    weights.push_back(w);
    sum += w;
    pos = end;
  }
  if (weights.empty()) {
    throw ParseError("algebra spec contains no weights", 0);
  }
  if (sum != 1) {
    throw ParseError("atom weights must sum to 1, got " + format_rational(sum), 0);
  }
  return FiniteAlgebra(std::move(weights));
}

std::string format_finite_event(FiniteEvent e) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (e & (FiniteEvent{1} << i)) {
      if (!first) out += ',';
      out += std::to_string(i);
      first = false;
    }
  }
  out += '}';
  return out;
}

}  // namespace ccc
