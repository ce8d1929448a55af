#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cf {

// Randomized and exhaustive verification suites over the whole library.
// Each returns the number of cases checked and, on failure, a
// counterexample. All randomness is seeded and deterministic.

struct CheckResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail; // counterexample description when pass == false
};

struct CheckSizes {
  int roundtrip_qmax;
  long lipschitz_pairs;
  int rho_exhaustive_max;
  long triangle_triples;
  long convergent_words;
  int stream_depth;
  int preimage_qmax;
  int probe_randoms;
  int probe_count;
  int limit_probe_count;
  long gcomp_words;
};

// Presets: "small", "medium", "large".
CheckSizes check_sizes(std::string_view preset);

// eval(expand(p/q)) == p/q for every rational in [0,1] with q <= qmax, and
// canonical form (final digit >= 2) on (0,1).
CheckResult check_roundtrip(int qmax);

// |eval(s) - eval(t)| <= dist(s, t) on random word/general-word pairs.
CheckResult check_lipschitz(std::uint64_t seed, long pairs);

// Metric axioms: rho exhaustively on {1..rho_max, inf} (plus rho <= 2), and
// the weighted-distance triangle inequality on random word triples.
CheckResult check_metric(int rho_max, std::uint64_t seed, long triples);

// q(k) >= F(k+1) with equality exactly on all-ones prefixes, coprime
// convergents, and the stream error bound |value - value_k| <=
// 1/(q(k) q(k+1)) via enclosures of the all-ones stream.
CheckResult check_convergents(std::uint64_t seed, long words, int stream_depth);

// Both expansions of every rational p/q (q <= qmax) evaluate back to it,
// the alternate is never produced by expand, and a bounded exhaustive
// search finds no third expansion.
CheckResult check_preimage(int qmax);

// One-sided convergence at rational targets: inside/outside sample
// distances eventually strictly decrease and end below 1/100; inside
// samples measured against the wrong limit stay above half the
// first-mismatch bound.
CheckResult check_probe_rational(std::uint64_t seed, int randoms, int count);

// Convergence at the endpoints (distances exactly 1/j at 0) and along the
// all-ones stream (final distance < 1/F(count-1)^2).
CheckResult check_probe_limits(int count);

// eval == eval-after-forget on random general words; forget is idempotent
// and lands in the stratified space.
CheckResult check_gcomp(std::uint64_t seed, long words);

// Recurrence vs rounded floating-point closed form for n <= 70, plus the
// Cassini identity for n <= 40.
CheckResult check_fib_binet();

// tail_bound(K) dominates the exact 60-term tail for K = 4..30.
CheckResult check_tail_bound();

bool known_suite(std::string_view suite);

// suite: roundtrip | lipschitz | metric | convergents | preimage | probe |
// gcomp | fib | tailbound | all.
std::vector<CheckResult> run_suite(std::string_view suite, std::uint64_t seed,
                                   const CheckSizes& sizes);

} // namespace cf
