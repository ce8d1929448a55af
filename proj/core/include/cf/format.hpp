#pragma once

#include <string>
#include <string_view>

#include "cf/metric.hpp"
#include "cf/rational.hpp"
#include "cf/seq.hpp"
#include "cf/topology.hpp"

namespace cf {

// Text forms. Rationals: "p/q" in lowest terms or a bare integer; the
// parser also accepts decimal strings ("0.49" is exactly 49/100), never
// floats. Sequences: "[d1,...,dn]" with positive integer digits and "inf"
// allowed ("[]" is the all-infinity sequence); streams are
// "[p1,...,pk|a1,...,am]" with preperiod p and period a ("[|1]" is the
// all-ones stream). Parsing is exact and printing round-trips.

Rational parse_rational(std::string_view text);

// stream_budget applies only when the text denotes a stream; it is not part
// of the grammar.
Seq parse_seq(std::string_view text, long stream_budget = 30);

std::string to_text(const Word& w);
std::string to_text(const GeneralWord& g);
std::string to_text(const Stream& s);
std::string to_text(const Seq& s);

// Inverse of DistResult::str(): "exact p/q" or "bracket p1/q1 p2/q2 depth=K".
DistResult parse_dist(std::string_view text);

// Decimal rendering of an exact rational, rounded half away from zero.
std::string decimal_string(const Rational& r, int places);

// One row per sample: t, word, exact distance, decimal distance (6 places).
std::string probe_table(const ProbeReport& report);

} // namespace cf
