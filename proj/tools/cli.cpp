#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <string>

#include "fperfect/contfrac.hpp"
#include "fperfect/factorization.hpp"
#include "fperfect/fibonacci.hpp"
#include "fperfect/markov.hpp"
#include "fperfect/natural.hpp"
#include "fperfect/pell.hpp"
#include "fperfect/primality.hpp"
#include "fperfect/search.hpp"
#include "fperfect/sigma3.hpp"

namespace fperfect::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dec(const Natural& n) { return to_decimal(n); }

ordered_json json_factors(const Factorization& f) {
  ordered_json factors = ordered_json::array();
  for (const PrimePower& pp : f.factors) {
    factors.push_back({{"prime", dec(pp.prime)}, {"exponent", pp.exponent}});
  }
  return factors;
}

std::string text_factors(const Factorization& f) {
  std::string out;
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i > 0) out += " * ";
    out += dec(f.factors[i].prime);
    if (f.factors[i].exponent > 1) {
      out += "^" + std::to_string(f.factors[i].exponent);
    }
  }
  return out;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

struct Report {
  ordered_json results = ordered_json::object();
  std::string completeness = "up-to-limit";
  std::vector<std::string> text;
};

struct Context {
  RunConfig config;

  ScanOptions scan() const { return {config.threads}; }
  PrimalityOptions primality() const {
    return {config.mr_rounds, config.seed};
  }
  FactorizeOptions factorizer() const {
    FactorizeOptions o;
    o.seed = config.seed;
    o.primality = primality();
    return o;
  }
};

Report do_search(const Context& ctx, unsigned a, unsigned long b) {
  Report r;
  if (a == 2) {
    auto sols = search_square_sum(b, ctx.config.limit, ctx.scan());
    SearchBounds bounds = square_sum_bounds(b);
    ordered_json list = ordered_json::array();
    for (const SolutionRecord& s : sols) {
      list.push_back({{"n", dec(s.n)}, {"factors", json_factors(s.factorization)}});
      r.text.push_back("n = " + dec(s.n) + " = " + text_factors(s.factorization));
    }
    if (sols.empty()) {
      r.text.push_back("no solutions up to " + std::to_string(ctx.config.limit));
    }
    r.results = {
        {"a", a},
        {"b", b},
        {"solutions", list},
        {"bounds",
         {{"three_prime_cutoff", dec(bounds.three_prime_cutoff)},
          {"two_prime_exponent_cap", dec(bounds.two_prime_exponent_cap)},
          {"squarefree_two_prime_empty", bounds.squarefree_two_prime_empty}}},
    };
    r.text.push_back("three-prime branch cutoff: n <= " +
                     dec(bounds.three_prime_cutoff));
    r.text.push_back("two-prime exponent cap: p1^(a1-1) p2^(a2-1) <= " +
                     dec(bounds.two_prime_exponent_cap));
    r.text.push_back(std::string("squarefree two-prime branch empty: ") +
                     (bounds.squarefree_two_prime_empty
                          ? "yes"
                          : "no (b = 3 admits solutions)"));
    // For b <= 2 every branch is settled unconditionally; otherwise the
    // mixed-exponent two-prime branch has no clean cutoff, so the scan
    // only vouches for n <= limit.
    r.completeness = b <= 2 ? "certified" : "up-to-limit";
  } else {
    Natural cutoff = Natural(b) * b / 4;
    auto sols = search_power_sum(a, b, ctx.config.limit, ctx.scan());
    ordered_json list = ordered_json::array();
    for (const SolutionRecord& s : sols) {
      list.push_back({{"n", dec(s.n)}, {"factors", json_factors(s.factorization)}});
      r.text.push_back("n = " + dec(s.n) + " = " + text_factors(s.factorization));
    }
    if (sols.empty()) r.text.push_back("no solutions");
    r.results = {
        {"a", a},
        {"b", b},
        {"cutoff", dec(cutoff)},
        {"solutions", list},
    };
    r.text.push_back("solution cutoff: n <= " + dec(cutoff));
    bool complete = cutoff <= static_cast<unsigned long>(ctx.config.limit);
    r.completeness = complete ? "certified" : "up-to-limit";
  }
  return r;
}

Report do_verify(const Context& ctx, const Natural& n) {
  Report r;
  bool fp = is_f_perfect(n, ctx.factorizer());
  sigma3::Verdict v = sigma3::classify(n, ctx.factorizer());
  r.results = {
      {"n", dec(n)},
      {"f_perfect", fp},
      {"sigma3",
       {{"divisible", v.divisible},
        {"shape", sigma3::to_string(v.shape)},
        {"classification", sigma3::to_string(v.classification)}}},
  };
  r.text.push_back("n = " + dec(n));
  r.text.push_back(std::string("F-perfect: ") + yesno(fp));
  r.text.push_back(std::string("n | sigma_3(n): ") + yesno(v.divisible));
  r.text.push_back(std::string("shape: ") + sigma3::to_string(v.shape));
  r.text.push_back(std::string("classification: ") +
                   sigma3::to_string(v.classification));
  r.completeness = "certified";
  return r;
}

Report do_certify(const Context& ctx, unsigned long max_k) {
  Report r;
  auto certs = generate_certificates(max_k, ctx.primality(), ctx.scan());
  ordered_json list = ordered_json::array();
  for (const FPerfectCertificate& c : certs) {
    list.push_back({
        {"k", c.k},
        {"f_lo", dec(c.f_lo)},
        {"f_hi", dec(c.f_hi)},
        {"n", dec(c.n)},
        {"digits", decimal_digits(c.n)},
        {"lo_verdict", to_string(c.lo_primality.verdict)},
        {"hi_verdict", to_string(c.hi_primality.verdict)},
        {"identity_checked", c.identity_checked},
        {"direct_checked", c.direct_checked},
    });
    r.text.push_back(
        "k=" + std::to_string(c.k) + ": n = F(" + std::to_string(2 * c.k - 1) +
        ") * F(" + std::to_string(2 * c.k + 1) + "), " +
        std::to_string(decimal_digits(c.n)) + " digits [" +
        to_string(c.lo_primality.verdict) + ", " +
        to_string(c.hi_primality.verdict) + "]" +
        (c.direct_checked ? ", divisor sum re-verified" : ", identity verified"));
  }
  if (certs.empty()) r.text.push_back("no certificates up to k = " + std::to_string(max_k));
  r.results = {{"max_k", max_k}, {"certificates", list}};
  return r;
}

Report do_cf(const Context&, const Natural& n) {
  Report r;
  SurdExpansion e = sqrt_expansion(n);
  ordered_json period = ordered_json::array();
  std::string text = "sqrt(" + dec(n) + ") = [" + dec(e.a0) + "; ";
  for (std::size_t i = 0; i < e.period.size(); ++i) {
    period.push_back(dec(e.period[i]));
    if (i > 0) text += ", ";
    text += dec(e.period[i]);
  }
  text += " repeating]";
  r.results = {
      {"n", dec(n)},
      {"a0", dec(e.a0)},
      {"period", period},
      {"period_length", e.period_length()},
  };
  r.text.push_back(text);
  r.text.push_back("period length: " + std::to_string(e.period_length()));
  r.completeness = "certified";
  return r;
}

Report do_pell_neg(const Context&, const Natural& n) {
  Report r;
  SurdExpansion e = sqrt_expansion(n);
  bool solvable = e.period_odd();
  r.results = {
      {"n", dec(n)},
      {"equation", "x^2 - N y^2 = -1"},
      {"period_length", e.period_length()},
      {"solvable", solvable},
      {"fundamental", nullptr},
  };
  r.text.push_back("x^2 - " + dec(n) + " y^2 = -1: period " +
                   std::to_string(e.period_length()) + ", " +
                   (solvable ? "solvable" : "unsolvable"));
  if (solvable) {
    PellSolution s = neg_pell_fundamental(n);
    r.results["fundamental"] = {{"x", dec(s.x)}, {"y", dec(s.y)}};
    r.text.push_back("fundamental: x = " + dec(s.x) + ", y = " + dec(s.y));
  }
  r.completeness = "certified";
  return r;
}

Report do_pell_neg4(const Context&, const Natural& d) {
  Report r;
  bool solvable = neg4_solvable(d);
  r.results = {
      {"d", dec(d)},
      {"equation", "x^2 - d y^2 = -4"},
      {"solvable", solvable},
      {"neg1_fundamental", nullptr},
      {"witness", nullptr},
  };
  r.text.push_back("x^2 - " + dec(d) + " y^2 = -4: " +
                   (solvable ? "solvable" : "unsolvable"));
  if (solvable) {
    PellSolution s = neg_pell_fundamental(d);
    // Doubling the -1 fundamental always lands on -4; a smaller odd
    // solution may exist, so this is a witness, not a minimum.
    PellSolution w{d, -4, 2 * s.x, 2 * s.y};
    r.results["neg1_fundamental"] = {{"x", dec(s.x)}, {"y", dec(s.y)}};
    r.results["witness"] = {{"x", dec(w.x)}, {"y", dec(w.y)}};
    r.text.push_back("via x^2 - d y^2 = -1 fundamental: x = " + dec(s.x) +
                     ", y = " + dec(s.y));
    r.text.push_back("witness (not necessarily minimal): x = " + dec(w.x) +
                     ", y = " + dec(w.y));
  }
  r.completeness = "certified";
  return r;
}

Report do_markov(const Context& ctx, unsigned long k, std::uint64_t bound,
                 bool certify) {
  Report r;
  if (certify) {
    markov::EmptinessReport rep = markov::verify_no_solutions(k, bound, ctx.scan());
    r.results = {
        {"k", k},
        {"bound", bound},
        {"brute_empty", rep.brute_empty},
        {"certified", rep.certified},
        {"certificate", markov::to_string(rep.certificate)},
        {"period_length", rep.period_length},
        {"pattern_holds", rep.pattern_holds},
    };
    r.text.push_back("k = " + std::to_string(k) + ": scan to " +
                     std::to_string(bound) + " found " +
                     (rep.brute_empty ? "nothing" : "solutions"));
    r.text.push_back(std::string("certificate: ") + markov::to_string(rep.certificate) +
                     (rep.certified ? " (certified empty for all x, y)"
                                    : " (not certified)"));
    if (rep.certificate == markov::Certificate::period_six) {
      r.text.push_back("sqrt(k^2 - 4) period: " + std::to_string(rep.period_length) +
                       ", pattern holds: " + yesno(rep.pattern_holds));
    }
    r.completeness = rep.certified ? "certified" : "up-to-limit";
  } else {
    auto pairs = markov::brute_solutions(k, bound, ctx.scan());
    ordered_json list = ordered_json::array();
    for (const markov::Pair& p : pairs) {
      list.push_back({{"x", dec(p.x)}, {"y", dec(p.y)}});
      r.text.push_back("(x, y) = (" + dec(p.x) + ", " + dec(p.y) + ")");
    }
    if (pairs.empty()) r.text.push_back("no solutions up to " + std::to_string(bound));
    r.results = {{"k", k}, {"bound", bound}, {"pairs", list}};
  }
  return r;
}

Report do_sigma3_scan(const Context& ctx, const std::string& shape,
                      const std::string& omega_mode) {
  Report r;
  if (shape == "semiprime") {
    auto ns = sigma3::scan_semiprimes(ctx.config.limit, ctx.scan());
    ordered_json list = ordered_json::array();
    for (const Natural& n : ns) {
      list.push_back(dec(n));
      r.text.push_back("n = " + dec(n));
    }
    if (ns.empty()) r.text.push_back("no dividing semiprimes");
    r.results = {{"shape", shape},
                 {"limit", std::to_string(ctx.config.limit)},
                 {"solutions", list}};
  } else if (shape == "2powp") {
    auto verdicts = sigma3::scan_two_power_times_prime(ctx.config.limit, ctx.scan());
    ordered_json list = ordered_json::array();
    for (const sigma3::Verdict& v : verdicts) {
      list.push_back({{"n", dec(v.n)},
                      {"divisible", v.divisible},
                      {"shape", sigma3::to_string(v.shape)},
                      {"classification", sigma3::to_string(v.classification)}});
      r.text.push_back("n = " + dec(v.n) + " [" +
                       sigma3::to_string(v.classification) + "]");
    }
    if (verdicts.empty()) r.text.push_back("no dividing 2^a * p values");
    r.results = {{"shape", shape},
                 {"limit", std::to_string(ctx.config.limit)},
                 {"solutions", list}};
  } else {  // conjecture
    sigma3::OmegaMode mode = omega_mode == "multiplicity"
                                 ? sigma3::OmegaMode::with_multiplicity
                                 : sigma3::OmegaMode::distinct;
    sigma3::ConjectureReport rep =
        sigma3::conjecture_scan(ctx.config.limit, mode, ctx.scan());
    auto to_list = [](const std::vector<Natural>& v) {
      ordered_json list = ordered_json::array();
      for (const Natural& n : v) list.push_back(dec(n));
      return list;
    };
    r.results = {{"shape", shape},
                 {"limit", std::to_string(ctx.config.limit)},
                 {"omega_mode",
                  mode == sigma3::OmegaMode::distinct ? "distinct" : "multiplicity"},
                 {"scanned", rep.scanned},
                 {"dividing", to_list(rep.dividing)},
                 {"counterexamples", to_list(rep.counterexamples)},
                 {"missing_perfect", to_list(rep.missing_perfect)}};
    r.text.push_back("scanned " + std::to_string(rep.scanned) +
                     " values with two prime factors (" +
                     (mode == sigma3::OmegaMode::distinct ? "distinct" : "multiplicity") +
                     ")");
    std::string dividing = "dividing:";
    for (const Natural& n : rep.dividing) dividing += " " + dec(n);
    r.text.push_back(dividing);
    r.text.push_back("counterexamples: " + std::to_string(rep.counterexamples.size()));
    r.text.push_back("perfect numbers missing divisibility: " +
                     std::to_string(rep.missing_perfect.size()));
  }
  return r;
}

Report do_fib_index(const Context&, std::uint64_t index) {
  Report r;
  Natural f = fib(index);
  Natural l = lucas(index);
  r.results = {{"index", index}, {"fib", dec(f)}, {"lucas", dec(l)}};
  r.text.push_back("F(" + std::to_string(index) + ") = " + dec(f));
  r.text.push_back("L(" + std::to_string(index) + ") = " + dec(l));
  r.completeness = "certified";
  return r;
}

Report do_fib_is(const Context&, const Natural& x) {
  Report r;
  auto idx = fibonacci_index(x);
  r.results = {{"value", dec(x)},
               {"is_fibonacci", idx.has_value()},
               {"index", nullptr}};
  if (idx) {
    r.results["index"] = *idx;
    r.text.push_back(dec(x) + " = F(" + std::to_string(*idx) + ")");
  } else {
    r.text.push_back(dec(x) + " is not a Fibonacci number");
  }
  r.completeness = "certified";
  return r;
}

void emit(const Context& ctx, const std::string& command, const Report& report,
          std::uint64_t elapsed_ms, std::ostream& out) {
  std::uint64_t reported_ms = ctx.config.no_timing ? 0 : elapsed_ms;
  if (ctx.config.format == "json") {
    // Thread count is deliberately absent: parallelism must never show in
    // the output bytes, whether set by flag or environment.
    ordered_json envelope = {
        {"command", command},
        {"config",
         {{"limit", std::to_string(ctx.config.limit)},
          {"mr_rounds", ctx.config.mr_rounds},
          {"format", ctx.config.format},
          {"seed", ctx.config.seed}}},
        {"results", report.results},
        {"elapsed_ms", reported_ms},
        {"completeness", report.completeness},
    };
    out << envelope.dump(2) << "\n";
  } else {
    out << "command: " << command << "\n";
    for (const std::string& line : report.text) out << line << "\n";
    out << "completeness: " << report.completeness << "\n";
    out << "elapsed: " << reported_ms << " ms\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"searches and verifications around F-perfect numbers, "
               "Pell periods, and cube-divisor sums"};
  app.name("fperfect");
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env = std::getenv("FPERFECT_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) {
      err << "FPERFECT_THREADS must be a positive integer\n";
      return 2;
    }
    config.threads = static_cast<unsigned>(v);
  }

  app.add_option("--format", config.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--threads", config.threads,
                 "worker threads (default from FPERFECT_THREADS)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", config.seed,
                 "randomness seed; 0 selects the fixed default");
  app.add_option("--rounds", config.mr_rounds, "witness rounds for primality")
      ->check(CLI::Range(1u, 10000u))
      ->capture_default_str();
  app.add_flag("--no-timing", config.no_timing,
               "report elapsed_ms as 0 for byte-stable output");

  unsigned long search_b = 0;
  unsigned search_a = 2;
  auto* search_cmd =
      app.add_subcommand("search", "solutions of sigma_a(n) - n^a = b n");
  search_cmd->fallthrough();
  search_cmd->add_option("--b", search_b, "target quotient b")->required();
  search_cmd->add_option("--a", search_a, "divisor power a (2 or higher)")
      ->check(CLI::Range(2u, 64u))
      ->capture_default_str();
  search_cmd->add_option("--limit", config.limit, "scan bound")
      ->capture_default_str();

  std::string verify_n;
  auto* verify_cmd =
      app.add_subcommand("verify", "F-perfect and cube-divisor verdict for one n");
  verify_cmd->fallthrough();
  verify_cmd->add_option("n", verify_n, "the number to verify")->required();

  unsigned long certify_max_k = 0;
  auto* certify_cmd = app.add_subcommand(
      "certify", "twin Fibonacci prime certificates F(2k-1) F(2k+1)");
  certify_cmd->fallthrough();
  certify_cmd->add_option("--max-k", certify_max_k, "largest k to examine")
      ->required();

  std::string cf_n;
  auto* cf_cmd =
      app.add_subcommand("cf", "continued fraction of sqrt(N)");
  cf_cmd->fallthrough();
  cf_cmd->add_option("N", cf_n, "non-square radicand")->required();

  std::string pell_neg, pell_neg4;
  auto* pell_cmd =
      app.add_subcommand("pell", "negative Pell equations x^2 - N y^2 = -1, -4");
  pell_cmd->fallthrough();
  auto* neg_opt = pell_cmd->add_option("--neg", pell_neg, "solve x^2 - N y^2 = -1");
  auto* neg4_opt = pell_cmd->add_option("--neg4", pell_neg4, "solve x^2 - d y^2 = -4");
  neg_opt->excludes(neg4_opt);
  neg4_opt->excludes(neg_opt);

  unsigned long markov_k = 0;
  bool markov_certify = false;
  auto* markov_cmd =
      app.add_subcommand("markov", "solutions of 1 + x^2 + y^2 = k x y");
  markov_cmd->fallthrough();
  markov_cmd->add_option("--k", markov_k, "coefficient k")->required();
  markov_cmd->add_option("--bound", config.limit, "scan bound")
      ->capture_default_str();
  markov_cmd->add_flag("--certify", markov_certify,
                       "emptiness certificate for k != 3");

  std::string sigma3_shape, sigma3_omega = "distinct";
  auto* sigma3_cmd = app.add_subcommand("sigma3", "cube-divisor-sum scans");
  sigma3_cmd->fallthrough();
  sigma3_cmd->require_subcommand(1);
  auto* sigma3_scan_cmd = sigma3_cmd->add_subcommand("scan", "run one scan");
  sigma3_scan_cmd->fallthrough();
  sigma3_scan_cmd
      ->add_option("--shape", sigma3_shape,
                   "semiprime | 2powp | conjecture")
      ->check(CLI::IsMember({"semiprime", "2powp", "conjecture"}))
      ->required();
  sigma3_scan_cmd->add_option("--limit", config.limit, "scan bound")
      ->capture_default_str();
  sigma3_scan_cmd
      ->add_option("--omega-mode", sigma3_omega,
                   "count primes distinct or with multiplicity")
      ->check(CLI::IsMember({"distinct", "multiplicity"}))
      ->capture_default_str();

  std::uint64_t fib_index_val = 0;
  std::string fib_is_val;
  auto* fib_cmd = app.add_subcommand("fib", "Fibonacci sequence queries");
  fib_cmd->fallthrough();
  auto* fib_index_opt =
      fib_cmd->add_option("--index", fib_index_val, "return F(i) and L(i)");
  auto* fib_is_opt =
      fib_cmd->add_option("--is", fib_is_val, "membership test for one value");
  fib_index_opt->excludes(fib_is_opt);
  fib_is_opt->excludes(fib_index_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Context ctx{config};
  std::string command;
  Report report;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (search_cmd->parsed()) {
      command = "search";
      report = do_search(ctx, search_a, search_b);
    } else if (verify_cmd->parsed()) {
      command = "verify";
      report = do_verify(ctx, parse_natural(verify_n));
    } else if (certify_cmd->parsed()) {
      command = "certify";
      report = do_certify(ctx, certify_max_k);
    } else if (cf_cmd->parsed()) {
      command = "cf";
      report = do_cf(ctx, parse_natural(cf_n));
    } else if (pell_cmd->parsed()) {
      command = "pell";
      if (neg_opt->count() + neg4_opt->count() != 1) {
        err << "usage error: pell needs exactly one of --neg or --neg4\n";
        return 2;
      }
      report = neg_opt->count() > 0
                   ? do_pell_neg(ctx, parse_natural(pell_neg))
                   : do_pell_neg4(ctx, parse_natural(pell_neg4));
    } else if (markov_cmd->parsed()) {
      command = "markov";
      report = do_markov(ctx, markov_k, ctx.config.limit, markov_certify);
    } else if (sigma3_cmd->parsed()) {
      command = "sigma3 scan";
      report = do_sigma3_scan(ctx, sigma3_shape, sigma3_omega);
    } else if (fib_cmd->parsed()) {
      command = "fib";
      if (fib_index_opt->count() + fib_is_opt->count() != 1) {
        err << "usage error: fib needs exactly one of --index or --is\n";
        return 2;
      }
      report = fib_index_opt->count() > 0
                   ? do_fib_index(ctx, fib_index_val)
                   : do_fib_is(ctx, parse_natural(fib_is_val));
    } else {
      err << "usage error: no command given\n";
      return 2;
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const budget_exceeded& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 3;
  }
  const auto t1 = std::chrono::steady_clock::now();
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

  emit(ctx, command, report, static_cast<std::uint64_t>(elapsed), out);
  return 0;
}

}  // namespace fperfect::cli
