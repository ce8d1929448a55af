#include "cf/format.hpp"

#include <cctype>
#include <vector>

namespace cf {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

BigInt parse_digits(std::string_view s, const char* what) {
  if (!all_digits(s))
    throw parse_error(std::string("expected ") + what + ", got '" +
                      std::string(s) + "'");
  return BigInt(std::string(s));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

BigInt pow10(long n) {
  BigInt p = 1;
  for (long i = 0; i < n; ++i)
    p *= 10;
  return p;
}

std::string join(const std::vector<BigInt>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i)
      out += ',';
    out += xs[i].str();
  }
  return out;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = strip(text);
  if (s.empty())
    throw parse_error("empty rational");

  int sign = 1;
  if (s.front() == '+' || s.front() == '-') {
    sign = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
  }

  size_t slash = s.find('/');
  size_t dot = s.find('.');
  if (slash != std::string_view::npos && dot != std::string_view::npos)
    throw parse_error("malformed rational '" + std::string(text) + "'");

  if (slash != std::string_view::npos) {
    std::string_view ns = strip(s.substr(0, slash));
    std::string_view ds = strip(s.substr(slash + 1));
    int dsign = 1;
    if (!ds.empty() && (ds.front() == '+' || ds.front() == '-')) {
      dsign = ds.front() == '-' ? -1 : 1;
      ds.remove_prefix(1);
    }
    BigInt p = parse_digits(ns, "numerator");
    BigInt q = parse_digits(ds, "denominator");
    if (q == 0)
      throw domain_error("zero denominator");
    return Rational(sign * p, dsign * q);
  }

  if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw parse_error("malformed rational '" + std::string(text) + "'");
    BigInt whole = ip.empty() ? BigInt(0) : parse_digits(ip, "digits");
    BigInt frac = fp.empty() ? BigInt(0) : parse_digits(fp, "digits");
    BigInt scale = pow10(static_cast<long>(fp.size()));
    return Rational(sign * (whole * scale + frac), scale);
  }

  return Rational(sign * parse_digits(s, "integer"));
}

Seq parse_seq(std::string_view text, long stream_budget) {
  std::string_view s = strip(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw parse_error("sequence must be bracketed: '" + std::string(text) +
                      "'");
  std::string_view inner = s.substr(1, s.size() - 2);

  const auto halves = split(inner, '|');
  if (halves.size() > 2)
    throw parse_error("at most one '|' allowed in a sequence");

  if (halves.size() == 2) {
    std::vector<BigInt> pre, per;
    std::string_view pre_sv = strip(halves[0]);
    std::string_view per_sv = strip(halves[1]);
    if (!pre_sv.empty())
      for (std::string_view piece : split(pre_sv, ','))
        pre.push_back(parse_digits(strip(piece), "stream digit"));
    if (per_sv.empty())
      throw parse_error("stream period must be non-empty");
    for (std::string_view piece : split(per_sv, ','))
      per.push_back(parse_digits(strip(piece), "stream digit"));
    return Seq(Stream(std::move(pre), std::move(per), stream_budget));
  }

  if (strip(inner).empty())
    return Seq(Word{});
  std::vector<ExtDigit> entries;
  for (std::string_view piece : split(inner, ',')) {
    std::string_view e = strip(piece);
    if (e == "inf")
      entries.push_back(ExtDigit::infinity());
    else
      entries.push_back(ExtDigit(parse_digits(e, "digit")));
  }
  return Seq(GeneralWord(std::move(entries)));
}

std::string to_text(const Word& w) { return "[" + join(w.block()) + "]"; }

std::string to_text(const GeneralWord& g) {
  std::string out = "[";
  for (size_t i = 0; i < g.entries().size(); ++i) {
    if (i)
      out += ',';
    const ExtDigit& d = g.entries()[i];
    out += d.is_inf() ? "inf" : d.value().str();
  }
  return out + "]";
}

std::string to_text(const Stream& s) {
  return "[" + join(s.preperiod()) + "|" + join(s.period()) + "]";
}

std::string to_text(const Seq& s) {
  switch (s.kind()) {
  case SeqKind::word:
    return to_text(s.word());
  case SeqKind::general:
    return to_text(s.general());
  default:
    return to_text(s.stream());
  }
}

DistResult parse_dist(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::string_view piece : split(strip(text), ' '))
    if (!piece.empty())
      parts.push_back(piece);
  if (parts.size() == 2 && parts[0] == "exact")
    return DistResult{parse_rational(parts[1]), std::nullopt, 0};
  if (parts.size() == 4 && parts[0] == "bracket" &&
      parts[3].rfind("depth=", 0) == 0) {
    const BigInt depth = parse_digits(parts[3].substr(6), "depth");
    return DistResult{std::nullopt,
                      std::make_pair(parse_rational(parts[1]),
                                     parse_rational(parts[2])),
                      depth.convert_to<long>()};
  }
  throw parse_error("malformed distance '" + std::string(text) + "'");
}

std::string decimal_string(const Rational& r, int places) {
  const BigInt scale = pow10(places);
  BigInt scaled_num = abs(r.num()) * scale;
  BigInt q = scaled_num / r.den();
  BigInt rem = scaled_num % r.den();
  if (2 * rem >= r.den())
    q += 1;
  BigInt whole = q / scale;
  std::string frac = BigInt(q % scale).str();
  std::string out;
  if (r.sign() < 0 && q != 0)
    out += '-';
  out += whole.str();
  if (places > 0) {
    out += '.';
    out += std::string(static_cast<size_t>(places) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string probe_table(const ProbeReport& report) {
  std::string out = "t\tword\tdistance\tdecimal\n";
  for (const ProbeSample& s : report.samples) {
    out += s.t.str();
    out += '\t';
    out += to_text(s.word);
    out += '\t';
    out += s.distance.str();
    out += '\t';
    out += decimal_string(s.distance, 6);
    out += '\n';
  }
  return out;
}

} // namespace cf
