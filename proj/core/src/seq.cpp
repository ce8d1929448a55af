#include "cf/seq.hpp"

#include <algorithm>

namespace cf {

namespace {

// Smallest d dividing m with per = (first d digits) repeated. Any period of
// an infinite periodic sequence is a multiple of the minimal one, so
// divisors are enough.
std::vector<BigInt> minimal_period(std::vector<BigInt> per) {
  const long m = static_cast<long>(per.size());
  for (long d = 1; d < m; ++d) {
    if (m % d != 0)
      continue;
    bool repeats = true;
    for (long i = d; i < m && repeats; ++i)
      repeats = per[static_cast<size_t>(i)] == per[static_cast<size_t>(i % d)];
    if (repeats) {
      per.resize(static_cast<size_t>(d));
      return per;
    }
  }
  return per;
}

} // namespace

Stream::Stream(std::vector<BigInt> preperiod, std::vector<BigInt> period,
               long depth_budget)
    : pre_(std::move(preperiod)), per_(std::move(period)),
      budget_(depth_budget) {
  if (per_.empty())
    throw domain_error("stream period must be non-empty");
  for (const BigInt& d : pre_)
    if (d < 1)
      throw domain_error("digits must be >= 1");
  for (const BigInt& d : per_)
    if (d < 1)
      throw domain_error("digits must be >= 1");
  if (budget_ < 1)
    throw domain_error("depth budget must be >= 1");

  per_ = minimal_period(std::move(per_));
  // Pull the period border as far left as it goes: (.., x | a.., x) and
  // (.. | x, a..) denote the same sequence.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.begin(), per_.end() - 1, per_.end());
  }
  per_ = minimal_period(std::move(per_));
}

Seq::Seq(GeneralWord g) : v_(Word{}) {
  std::vector<ExtDigit> entries = g.entries();
  while (!entries.empty() && entries.back().is_inf())
    entries.pop_back();
  const bool interior_inf =
      std::any_of(entries.begin(), entries.end(),
                  [](const ExtDigit& d) { return d.is_inf(); });
  if (interior_inf) {
    v_ = GeneralWord(std::move(entries));
  } else {
    std::vector<BigInt> block;
    block.reserve(entries.size());
    for (const ExtDigit& d : entries)
      block.push_back(d.value());
    v_ = Word(std::move(block));
  }
}

ExtDigit Seq::digit(long k) const {
  switch (kind()) {
  case SeqKind::word:
    return word().digit(k);
  case SeqKind::general:
    return general().digit(k);
  default:
    return ExtDigit(stream().digit(k));
  }
}

bool operator==(const Seq& a, const Seq& b) {
  if (a.kind() != b.kind())
    return false;
  switch (a.kind()) {
  case SeqKind::word:
    return a.word() == b.word();
  case SeqKind::general:
    return a.general() == b.general();
  default:
    return a.stream().same_sequence(b.stream());
  }
}

std::string Stratum::str() const {
  switch (kind) {
  case Kind::finite:
    return std::to_string(n);
  case Kind::infinite:
    return "inf";
  default:
    return "not-in-sigma";
  }
}

Stratum stratum(const Seq& s) {
  switch (s.kind()) {
  case SeqKind::word:
    return Stratum::finite(s.word().size());
  case SeqKind::stream:
    return Stratum::infinite();
  default:
    // Normalized general words always keep an interior infinity followed by
    // a finite digit.
    return Stratum::outside();
  }
}

Seq truncate(const Seq& s, long n) {
  if (n < 0)
    throw domain_error("truncation length must be non-negative");
  switch (s.kind()) {
  case SeqKind::word: {
    const Word& w = s.word();
    if (n >= w.size())
      return s;
    std::vector<BigInt> block(w.block().begin(), w.block().begin() + n);
    return Seq(Word(std::move(block)));
  }
  case SeqKind::general: {
    const GeneralWord& g = s.general();
    if (n >= g.size())
      return s;
    std::vector<ExtDigit> entries(g.entries().begin(),
                                  g.entries().begin() + n);
    return Seq(GeneralWord(std::move(entries)));
  }
  default: {
    const Stream& st = s.stream();
    if (n > st.depth_budget())
      throw domain_error("depth budget exceeded");
    std::vector<BigInt> block;
    block.reserve(static_cast<size_t>(n));
    for (long k = 1; k <= n; ++k)
      block.push_back(st.digit(k));
    return Seq(Word(std::move(block)));
  }
  }
}

Seq forget(const Seq& s) {
  if (!s.is_general())
    return s;
  std::vector<BigInt> block;
  for (const ExtDigit& d : s.general().entries()) {
    if (d.is_inf())
      break;
    block.push_back(d.value());
  }
  return Seq(Word(std::move(block)));
}

bool equivalent(const Seq& s, const Seq& t) { return forget(s) == forget(t); }

bool in_cylinder(const Seq& u, const Word& sigma) {
  if (sigma.size() < 1)
    throw domain_error("cylinder base must lie in Sigma_n, n >= 1");
  if (!stratum(u).in_sigma())
    throw domain_error("cylinder membership requires a sequence in Sigma");
  return truncate(u, sigma.size()) == Seq(sigma);
}

} // namespace cf
