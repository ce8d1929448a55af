#include "cf/topology.hpp"

#include <algorithm>

#include "cf/format.hpp"
#include "cf/metric.hpp"

namespace cf {

namespace {

void check_unit_interval(const Rational& x) {
  if (x.sign() < 0 || Rational(1) < x)
    throw domain_error("domain is [0,1]");
}

// Does expand(x) start with sigma's digits?
bool digits_match(const Rational& x, const Word& sigma) {
  const Word w = expand(x);
  if (w.size() < sigma.size())
    return false;
  return std::equal(sigma.block().begin(), sigma.block().end(),
                    w.block().begin());
}

void search_rec(const Rational& y, long rem_len, const BigInt& max_digit,
                std::vector<BigInt>& prefix, std::vector<Word>& out) {
  if (y.is_zero()) {
    out.push_back(Word(prefix));
    return;
  }
  if (rem_len == 0)
    return;
  // Candidates d with 1/y - d in [0, 1]: the integers in [1/y - 1, 1/y].
  const BigInt fl = y.den() / y.num(); // floor(1/y); y in (0,1] so fl >= 1
  for (const BigInt& d : {BigInt(fl - 1), fl}) {
    if (d < 1 || d > max_digit)
      continue;
    const Rational rest = y.reciprocal() - Rational(d);
    if (rest.sign() < 0 || Rational(1) < rest)
      continue;
    prefix.push_back(d);
    search_rec(rest, rem_len - 1, max_digit, prefix, out);
    prefix.pop_back();
  }
}

Rational pow10_inv(int j) {
  BigInt p = 1;
  for (int i = 0; i < j; ++i)
    p *= 10;
  return Rational(BigInt(1), p);
}

} // namespace

std::string Interval::str() const {
  std::string s;
  s += lo_closed ? '[' : '(';
  s += lo.str();
  s += ", ";
  s += hi.str();
  s += hi_closed ? ']' : ')';
  return s;
}

Interval fundamental_interval(const Word& sigma) {
  const long n = sigma.size();
  if (n < 1)
    throw domain_error("fundamental interval requires a word in Sigma_n, n >= 1");
  Convergents c(Seq(sigma), n);
  Rational a(c.p(n), c.q(n));
  Rational b(c.p(n) + c.p(n - 1), c.q(n) + c.q(n - 1));
  if (b < a)
    std::swap(a, b);
  return Interval{a, b, digits_match(a, sigma), digits_match(b, sigma)};
}

Preimage preimage(const Rational& x) {
  check_unit_interval(x);
  if (x.is_zero())
    return Word{};
  if (x == Rational(1))
    return Word{1};
  Word canonical = expand(x);
  std::vector<BigInt> alt = canonical.block();
  alt.back() -= 1;
  alt.push_back(1);
  return PreimagePair{std::move(canonical), Word(std::move(alt)), x};
}

bool alternate_is_noncanonical(const PreimagePair& p) {
  return expand(eval_exact(Seq(p.alternate))) != p.alternate;
}

std::vector<Word> preimage_search(const Rational& x, long max_len,
                                  const BigInt& max_digit) {
  check_unit_interval(x);
  std::vector<Word> out;
  std::vector<BigInt> prefix;
  search_rec(x, max_len, max_digit, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

ProbeReport continuity_probe(const Rational& x, Side side, int count) {
  if (!(Rational(0) < x && x < Rational(1)))
    throw domain_error("probe target must lie in (0,1)");
  if (count < 3)
    throw domain_error("probe count must be >= 3");

  const auto pair = std::get<PreimagePair>(preimage(x));
  const Interval iv = fundamental_interval(pair.canonical);
  // x is always one endpoint of its own fundamental interval; the interval
  // stretches from x toward the mediant.
  const Rational mediant = (iv.lo == x) ? iv.hi : iv.lo;
  const bool mediant_above = x < mediant;

  Rational delta = min(x, Rational(1) - x) / Rational(2);
  if (side == Side::inside) {
    // Samples must land inside the interval, which may be narrower than the
    // distance to the boundary of (0,1).
    delta = min(delta, abs(mediant - x) / Rational(2));
  }
  const bool step_up = (side == Side::inside) ? mediant_above : !mediant_above;
  if (delta.is_zero())
    throw domain_error("cannot place samples");

  ProbeReport report;
  report.kind = (side == Side::inside) ? "inside" : "outside";
  report.x = x;
  report.limit_word = (side == Side::inside) ? pair.canonical : pair.alternate;
  report.subject = x.str();
  for (int j = 1; j <= count; ++j) {
    const Rational offset = delta * pow10_inv(j);
    const Rational t = step_up ? x + offset : x - offset;
    if (!(Rational(0) < t && t < Rational(1)))
      throw domain_error("cannot place samples");
    Word w = expand(t);
    Rational d = quotient_dist(w, *report.limit_word);
    report.samples.push_back(ProbeSample{t, std::move(w), std::move(d)});
  }
  return report;
}

ProbeReport irrational_probe(const Stream& s, int count) {
  if (count < 1)
    throw domain_error("probe count must be >= 1");
  if (s.depth_budget() < count + 2)
    throw domain_error("depth budget exceeded");

  ProbeReport report;
  report.kind = "stream";
  report.subject = to_text(Seq(s));
  for (int k = 3; k <= count + 2; ++k) {
    const Rational t = eval_k(Seq(s), k);
    Word w = expand(t);
    const Word prefix = truncate(Seq(s), k - 1).word();
    Rational d = finite_dist(Seq(w), Seq(prefix));
    report.samples.push_back(ProbeSample{t, std::move(w), std::move(d)});
  }
  return report;
}

ProbeReport endpoint_probe(int endpoint, int count) {
  if (endpoint != 0 && endpoint != 1)
    throw domain_error("endpoint probe target must be 0 or 1");
  if (count < 1)
    throw domain_error("probe count must be >= 1");

  ProbeReport report;
  report.kind = endpoint == 0 ? "endpoint-0" : "endpoint-1";
  report.x = Rational(endpoint);
  report.limit_word = endpoint == 0 ? Word{} : Word{1};
  report.subject = report.x->str();
  if (endpoint == 0) {
    for (int j = 1; j <= count; ++j) {
      const Rational t(BigInt(1), BigInt(j));
      Word w = expand(t);
      Rational d = quotient_dist(w, *report.limit_word);
      report.samples.push_back(ProbeSample{t, std::move(w), std::move(d)});
    }
  } else {
    for (int j = 2; j <= count + 1; ++j) {
      const Rational t(BigInt(j - 1), BigInt(j));
      Word w = expand(t);
      Rational d = quotient_dist(w, *report.limit_word);
      report.samples.push_back(ProbeSample{t, std::move(w), std::move(d)});
    }
  }
  return report;
}

} // namespace cf
