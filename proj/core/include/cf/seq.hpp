#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cf/bigint.hpp"
#include "cf/error.hpp"

namespace cf {

// A partial quotient: a positive integer or the point at infinity. The
// infinity digit marks where a terminating expansion ends; its reciprocal
// counts as 0 everywhere.
class ExtDigit {
public:
  ExtDigit(BigInt value) : value_(std::move(value)), inf_(false) {
    if (value_ < 1)
      throw domain_error("digits must be >= 1");
  }
  ExtDigit(long long value) : ExtDigit(BigInt(value)) {}

  static ExtDigit infinity() { return ExtDigit(inf_tag{}); }

  bool is_inf() const { return inf_; }
  const BigInt& value() const {
    if (inf_)
      throw domain_error("infinite digit has no value");
    return value_;
  }

  friend bool operator==(const ExtDigit& a, const ExtDigit& b) {
    if (a.inf_ != b.inf_)
      return false;
    return a.inf_ || a.value_ == b.value_;
  }
  friend bool operator!=(const ExtDigit& a, const ExtDigit& b) {
    return !(a == b);
  }

private:
  struct inf_tag {};
  explicit ExtDigit(inf_tag) : value_(0), inf_(true) {}

  BigInt value_;
  bool inf_;
};

// A finitely supported sequence: a finite block of finite digits followed by
// an implicit all-infinity tail. The empty block is the all-infinity
// sequence (the unique element of the 0-stratum).
class Word {
public:
  Word() = default;
  explicit Word(std::vector<BigInt> block) : block_(std::move(block)) {
    for (const BigInt& d : block_)
      if (d < 1)
        throw domain_error("digits must be >= 1");
  }
  Word(std::initializer_list<long long> digits) {
    for (long long d : digits)
      block_.emplace_back(d);
    for (const BigInt& d : block_)
      if (d < 1)
        throw domain_error("digits must be >= 1");
  }

  const std::vector<BigInt>& block() const { return block_; }
  long size() const { return static_cast<long>(block_.size()); }
  bool empty() const { return block_.empty(); }

  // 1-based; infinity beyond the block.
  ExtDigit digit(long k) const {
    if (k < 1)
      throw domain_error("digit positions are 1-based");
    if (k > size())
      return ExtDigit::infinity();
    return ExtDigit(block_[static_cast<size_t>(k - 1)]);
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.block_ == b.block_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    return a.block_ < b.block_;
  }

private:
  std::vector<BigInt> block_;
};

// A finite list over extended digits with an implicit infinity tail; the
// infinity digit may appear in the interior, so these cover sequences
// outside the stratified space as well (e.g. [3,inf,4]). Stored as given;
// normalization happens when one is wrapped into a Seq.
class GeneralWord {
public:
  GeneralWord() = default;
  explicit GeneralWord(std::vector<ExtDigit> entries)
      : entries_(std::move(entries)) {}

  const std::vector<ExtDigit>& entries() const { return entries_; }
  long size() const { return static_cast<long>(entries_.size()); }

  ExtDigit digit(long k) const {
    if (k < 1)
      throw domain_error("digit positions are 1-based");
    if (k > size())
      return ExtDigit::infinity();
    return entries_[static_cast<size_t>(k - 1)];
  }

  friend bool operator==(const GeneralWord& a, const GeneralWord& b) {
    return a.entries_ == b.entries_;
  }

private:
  std::vector<ExtDigit> entries_;
};

// An eventually periodic all-finite sequence: preperiod ++ period ++ period
// ++ ... The representation is normalized on construction to the unique
// minimal (preperiod, period) pair, so value equality is field equality.
// depth_budget caps how many digits any operation may read; it is an
// evaluation parameter, not part of the value.
class Stream {
public:
  Stream(std::vector<BigInt> preperiod, std::vector<BigInt> period,
         long depth_budget = 30);

  const std::vector<BigInt>& preperiod() const { return pre_; }
  const std::vector<BigInt>& period() const { return per_; }
  long depth_budget() const { return budget_; }

  Stream with_budget(long depth_budget) const {
    return Stream(pre_, per_, depth_budget);
  }

  // 1-based digit; reading past the budget is an error.
  BigInt digit(long k) const {
    if (k < 1)
      throw domain_error("digit positions are 1-based");
    if (k > budget_)
      throw domain_error("depth budget exceeded");
    return digit_unchecked(k);
  }

  // Same sequence, budgets ignored.
  bool same_sequence(const Stream& o) const {
    return pre_ == o.pre_ && per_ == o.per_;
  }

private:
  BigInt digit_unchecked(long k) const {
    const long p = static_cast<long>(pre_.size());
    if (k <= p)
      return pre_[static_cast<size_t>(k - 1)];
    const long m = static_cast<long>(per_.size());
    return per_[static_cast<size_t>((k - p - 1) % m)];
  }

  std::vector<BigInt> pre_;
  std::vector<BigInt> per_;
  long budget_;
};

enum class SeqKind { word, general, stream };

// Where a sequence sits in the stratification: exactly n finite digits then
// all-infinity (finite n), all digits finite (infinite), or not in the
// stratified space at all (an interior infinity followed by a finite digit).
struct Stratum {
  enum class Kind { finite, infinite, outside };
  Kind kind;
  long n = 0; // meaningful only when kind == finite

  static Stratum finite(long n) { return {Kind::finite, n}; }
  static Stratum infinite() { return {Kind::infinite, 0}; }
  static Stratum outside() { return {Kind::outside, 0}; }

  bool is_finite() const { return kind == Kind::finite; }
  bool in_sigma() const { return kind != Kind::outside; }

  friend bool operator==(const Stratum& a, const Stratum& b) {
    return a.kind == b.kind && (a.kind != Kind::finite || a.n == b.n);
  }

  std::string str() const;
};

// A point of the extended digit-sequence space. Wrapping a GeneralWord
// normalizes it: trailing infinity entries are dropped, and if no interior
// infinity remains the value collapses to a Word. After normalization a
// Seq holding a GeneralWord is exactly a sequence outside the stratified
// space. Value equality compares denoted sequences.
class Seq {
public:
  Seq(Word w) : v_(std::move(w)) {}
  Seq(Stream s) : v_(std::move(s)) {}
  Seq(GeneralWord g);

  SeqKind kind() const { return static_cast<SeqKind>(v_.index()); }
  bool is_word() const { return kind() == SeqKind::word; }
  bool is_general() const { return kind() == SeqKind::general; }
  bool is_stream() const { return kind() == SeqKind::stream; }

  const Word& word() const { return std::get<Word>(v_); }
  const GeneralWord& general() const { return std::get<GeneralWord>(v_); }
  const Stream& stream() const { return std::get<Stream>(v_); }

  // 1-based digit of the denoted sequence.
  ExtDigit digit(long k) const;

  friend bool operator==(const Seq& a, const Seq& b);
  friend bool operator!=(const Seq& a, const Seq& b) { return !(a == b); }

private:
  std::variant<Word, GeneralWord, Stream> v_;
};

Stratum stratum(const Seq& s);

// First n digits kept, the rest replaced by infinity. Streams require
// n <= depth_budget.
Seq truncate(const Seq& s, long n);

// The forgetting map: everything after the first infinity digit becomes
// infinity. Fixes streams and anything already in the stratified space;
// the result always lies in it.
Seq forget(const Seq& s);

// Same image under the forgetting map.
bool equivalent(const Seq& s, const Seq& t);

// Does u start with exactly sigma's digits? sigma must have n >= 1 finite
// digits and u must lie in the stratified space.
bool in_cylinder(const Seq& u, const Word& sigma);

} // namespace cf
