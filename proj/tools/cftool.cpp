// Command-line front end: every library operation with exact input and
// output. Exit codes: 0 success, 1 domain/validation error, 2 usage error,
// 3 suite failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cf/checks.hpp"
#include "cf/evaluator.hpp"
#include "cf/fib.hpp"
#include "cf/format.hpp"
#include "cf/metric.hpp"
#include "cf/topology.hpp"

using json = nlohmann::ordered_json;
using namespace cf;

namespace {

struct Options {
  bool json_out = false;
  long budget = 30;
};

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.json_out)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

ExtDigit parse_ext_digit(const std::string& s) {
  if (s == "inf")
    return ExtDigit::infinity();
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("expected a positive integer or 'inf', got '" + s + "'");
  return ExtDigit(BigInt(s));
}

std::string enclosure_text(const Enclosure& e) {
  return "enclosure " + e.lo.str() + " " + e.hi.str() +
         " depth=" + std::to_string(e.depth) + "\n";
}

json enclosure_json(const Enclosure& e) {
  return json{{"lo", e.lo.str()},
              {"hi", e.hi.str()},
              {"depth", e.depth},
              {"lo_decimal", decimal_string(e.lo, 6)},
              {"hi_decimal", decimal_string(e.hi, 6)}};
}

json dist_json(const DistResult& d) {
  json out;
  if (d.is_exact()) {
    out["exact"] = d.exact->str();
    out["decimal"] = decimal_string(*d.exact, 6);
  } else {
    out["bracket"] = json{{"lo", d.bracket->first.str()},
                          {"hi", d.bracket->second.str()}};
    out["depth"] = d.depth_used;
  }
  return out;
}

json probe_json(const ProbeReport& r) {
  json samples = json::array();
  for (const ProbeSample& s : r.samples)
    samples.push_back(json{{"t", s.t.str()},
                           {"word", to_text(s.word)},
                           {"distance", s.distance.str()},
                           {"decimal", decimal_string(s.distance, 6)}});
  json out{{"kind", r.kind}, {"subject", r.subject}};
  if (r.limit_word)
    out["limit"] = to_text(*r.limit_word);
  out["samples"] = samples;
  return out;
}

std::string probe_header(const ProbeReport& r) {
  std::string head = "subject = " + r.subject + "  kind = " + r.kind;
  if (r.limit_word)
    head += "  limit = " + to_text(*r.limit_word);
  return head + "\n";
}

int run_check(const Options& opt, const std::string& suite, std::uint64_t seed,
              const std::string& size) {
  const CheckSizes sizes = check_sizes(size);
  if (!known_suite(suite))
    throw domain_error("unknown suite '" + suite + "'");
  const std::vector<CheckResult> results = run_suite(suite, seed, sizes);
  bool all_pass = true;
  std::string text;
  json rows = json::array();
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    text += r.name + ": " + (r.pass ? "PASS" : "FAIL") + " (" +
            std::to_string(r.cases) + " cases)\n";
    if (!r.pass)
      text += "  counterexample: " + r.detail + "\n";
    json row{{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}};
    if (!r.pass)
      row["counterexample"] = r.detail;
    rows.push_back(row);
  }
  emit(opt, json{{"cmd", "check"}, {"suites", rows}, {"pass", all_pass}}, text);
  return all_pass ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  Options opt;
  int exit_code = 0;

  CLI::App app{"exact continued-fraction expansions, digit-sequence space, "
               "Fibonacci-weighted metric and continuity probes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json_out, "emit one JSON document instead of text");

  // expand
  std::string arg_x;
  CLI::App* c_expand = app.add_subcommand("expand", "digit expansion of a rational in [0,1]");
  c_expand->add_option("x", arg_x, "rational (p/q, integer or decimal)")->required();
  c_expand->callback([&] {
    const Word w = expand(parse_rational(arg_x));
    emit(opt, json{{"cmd", "expand"}, {"x", arg_x}, {"word", to_text(w)}},
         to_text(w) + "\n");
  });

  // eval
  std::string arg_seq;
  CLI::App* c_eval = app.add_subcommand("eval", "value of a digit sequence");
  c_eval->add_option("seq", arg_seq, "sequence, e.g. [2,2] or [3,inf,4] or [|1]")->required();
  c_eval->add_option("--budget", opt.budget, "stream depth budget")->capture_default_str();
  c_eval->callback([&] {
    const EvalResult r = eval(parse_seq(arg_seq, opt.budget));
    if (const Rational* v = std::get_if<Rational>(&r)) {
      emit(opt, json{{"cmd", "eval"}, {"seq", arg_seq}, {"value", v->str()}},
           v->str() + "\n");
    } else {
      const Enclosure& e = std::get<Enclosure>(r);
      emit(opt, json{{"cmd", "eval"}, {"seq", arg_seq}, {"enclosure", enclosure_json(e)}},
           enclosure_text(e));
    }
  });

  // evalk
  long arg_k = 0;
  CLI::App* c_evalk = app.add_subcommand("evalk", "value of the first k digits");
  c_evalk->add_option("seq", arg_seq)->required();
  c_evalk->add_option("k", arg_k, "depth, k >= 0")->required();
  c_evalk->add_option("--budget", opt.budget)->capture_default_str();
  c_evalk->callback([&] {
    const Rational v = eval_k(parse_seq(arg_seq, opt.budget), arg_k);
    emit(opt, json{{"cmd", "evalk"}, {"seq", arg_seq}, {"k", arg_k}, {"value", v.str()}},
         v.str() + "\n");
  });

  // conv
  long arg_n = 0;
  CLI::App* c_conv = app.add_subcommand("conv", "convergent table p(k)/q(k), k = -1..n");
  c_conv->add_option("seq", arg_seq)->required();
  c_conv->add_option("n", arg_n, "table depth, n >= 0")->required();
  c_conv->add_option("--budget", opt.budget)->capture_default_str();
  c_conv->callback([&] {
    const Convergents c(parse_seq(arg_seq, opt.budget), arg_n);
    std::string text = "k\tp\tq\n";
    json rows = json::array();
    for (long k = -1; k <= c.max_index(); ++k) {
      text += std::to_string(k) + "\t" + c.p(k).str() + "\t" + c.q(k).str() + "\n";
      rows.push_back(json{{"k", k}, {"p", c.p(k).str()}, {"q", c.q(k).str()}});
    }
    emit(opt, json{{"cmd", "conv"}, {"seq", arg_seq}, {"n", arg_n}, {"table", rows}}, text);
  });

  // dist
  std::string arg_seq2;
  std::optional<long> arg_depth;
  CLI::App* c_dist = app.add_subcommand("dist", "weighted distance between two sequences");
  c_dist->add_option("s", arg_seq)->required();
  c_dist->add_option("t", arg_seq2)->required();
  long depth_flag = -1;
  c_dist->add_option("--depth", depth_flag, "explicit bracket depth (streams)");
  c_dist->add_option("--budget", opt.budget)->capture_default_str();
  c_dist->callback([&] {
    if (depth_flag >= 0)
      arg_depth = depth_flag;
    const DistResult d = dist(parse_seq(arg_seq, opt.budget),
                              parse_seq(arg_seq2, opt.budget), arg_depth);
    emit(opt,
         json{{"cmd", "dist"}, {"s", arg_seq}, {"t", arg_seq2}, {"dist", dist_json(d)}},
         d.str() + "\n");
  });

  // rho
  std::string arg_m, arg_mn;
  CLI::App* c_rho = app.add_subcommand("rho", "digit metric on extended digits");
  c_rho->add_option("m", arg_m, "positive integer or inf")->required();
  c_rho->add_option("n", arg_mn, "positive integer or inf")->required();
  c_rho->callback([&] {
    const Rational v = rho(parse_ext_digit(arg_m), parse_ext_digit(arg_mn));
    emit(opt, json{{"cmd", "rho"}, {"m", arg_m}, {"n", arg_mn}, {"value", v.str()}},
         v.str() + "\n");
  });

  // fib
  long arg_fib = 0;
  CLI::App* c_fib = app.add_subcommand("fib", "Fibonacci number F(n)");
  c_fib->add_option("n", arg_fib)->required();
  c_fib->callback([&] {
    const BigInt f = fib(arg_fib);
    emit(opt, json{{"cmd", "fib"}, {"n", arg_fib}, {"value", f.str()}}, f.str() + "\n");
  });

  // interval
  CLI::App* c_interval = app.add_subcommand("interval", "fundamental interval of a word");
  c_interval->add_option("seq", arg_seq)->required();
  c_interval->callback([&] {
    const Seq s = parse_seq(arg_seq);
    if (!s.is_word())
      throw domain_error("fundamental interval requires a word in Sigma_n, n >= 1");
    const Interval iv = fundamental_interval(s.word());
    emit(opt,
         json{{"cmd", "interval"},
              {"seq", arg_seq},
              {"lo", iv.lo.str()},
              {"hi", iv.hi.str()},
              {"lo_closed", iv.lo_closed},
              {"hi_closed", iv.hi_closed}},
         iv.str() + "\n");
  });

  // preimage
  CLI::App* c_pre = app.add_subcommand("preimage", "all expansions of a rational in [0,1]");
  c_pre->add_option("x", arg_x)->required();
  c_pre->callback([&] {
    const Preimage p = preimage(parse_rational(arg_x));
    if (const Word* w = std::get_if<Word>(&p)) {
      emit(opt, json{{"cmd", "preimage"}, {"x", arg_x}, {"unique", to_text(*w)}},
           "unique\t" + to_text(*w) + "\n");
    } else {
      const PreimagePair& pp = std::get<PreimagePair>(p);
      emit(opt,
           json{{"cmd", "preimage"},
                {"x", arg_x},
                {"canonical", to_text(pp.canonical)},
                {"alternate", to_text(pp.alternate)}},
           "canonical\t" + to_text(pp.canonical) + "\nalternate\t" +
               to_text(pp.alternate) + "\n");
    }
  });

  // gmap
  CLI::App* c_gmap = app.add_subcommand("gmap", "forgetting map onto the stratified space");
  c_gmap->add_option("seq", arg_seq)->required();
  c_gmap->callback([&] {
    const Seq g = forget(parse_seq(arg_seq));
    emit(opt, json{{"cmd", "gmap"}, {"seq", arg_seq}, {"image", to_text(g)}},
         to_text(g) + "\n");
  });

  // cyl
  std::string arg_base;
  CLI::App* c_cyl = app.add_subcommand("cyl", "cylinder membership");
  c_cyl->add_option("seq", arg_seq, "sequence in the stratified space")->required();
  c_cyl->add_option("base", arg_base, "word with n >= 1 digits")->required();
  c_cyl->callback([&] {
    const Seq base = parse_seq(arg_base);
    if (!base.is_word())
      throw domain_error("cylinder base must lie in Sigma_n, n >= 1");
    const bool in = in_cylinder(parse_seq(arg_seq), base.word());
    emit(opt, json{{"cmd", "cyl"}, {"seq", arg_seq}, {"base", arg_base}, {"member", in}},
         std::string(in ? "true" : "false") + "\n");
  });

  // probe
  std::string arg_side = "inside";
  int arg_count = 6;
  CLI::App* c_probe = app.add_subcommand("probe", "one-sided continuity probe at a rational");
  c_probe->add_option("x", arg_x)->required();
  c_probe->add_option("--side", arg_side, "inside | outside")
      ->check(CLI::IsMember({"inside", "outside"}))
      ->capture_default_str();
  c_probe->add_option("--count", arg_count, "number of samples, >= 3")
      ->capture_default_str();
  c_probe->callback([&] {
    const Side side = arg_side == "inside" ? Side::inside : Side::outside;
    const ProbeReport r = continuity_probe(parse_rational(arg_x), side, arg_count);
    emit(opt, probe_json(r), probe_header(r) + probe_table(r));
  });

  // probe-irr
  std::string arg_target;
  long budget_flag = -1;
  CLI::App* c_irr = app.add_subcommand(
      "probe-irr", "continuity probe along a stream, or at the endpoints 0/1");
  c_irr->add_option("stream", arg_target, "stream like [|1], or 0 or 1")->required();
  c_irr->add_option("--count", arg_count, "number of samples")->capture_default_str();
  c_irr->add_option("--budget", budget_flag, "stream depth budget (default count+2)");
  c_irr->callback([&] {
    ProbeReport r;
    if (arg_target == "0" || arg_target == "1") {
      r = endpoint_probe(arg_target == "1" ? 1 : 0, arg_count);
    } else {
      const long budget = budget_flag >= 0 ? budget_flag : arg_count + 2;
      const Seq s = parse_seq(arg_target, budget);
      if (!s.is_stream())
        throw domain_error("probe-irr expects a stream or an endpoint 0/1");
      r = irrational_probe(s.stream(), arg_count);
    }
    emit(opt, probe_json(r), probe_header(r) + probe_table(r));
  });

  // check
  std::string arg_suite = "all";
  std::uint64_t arg_seed = 0;
  std::string arg_size = "small";
  CLI::App* c_check = app.add_subcommand("check", "run the verification suites");
  c_check->add_option("--suite", arg_suite,
                      "roundtrip | lipschitz | metric | convergents | preimage "
                      "| probe | gcomp | fib | tailbound | all")
      ->capture_default_str();
  c_check->add_option("--seed", arg_seed)->capture_default_str();
  c_check->add_option("--size", arg_size, "small | medium | large")
      ->check(CLI::IsMember({"small", "medium", "large"}))
      ->capture_default_str();
  c_check->callback([&] { exit_code = run_check(opt, arg_suite, arg_seed, arg_size); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
