#pragma once

// Command-line front end. Every subcommand builds a table (or a word list)
// and renders it as csv, json or plain text.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "superpat/superpat.hpp"

#ifndef SUPERPAT_FIXTURE_DIR
#define SUPERPAT_FIXTURE_DIR "tests/fixtures"
#endif

namespace superpat::cli {

enum ExitCode : int {
  kOk = 0,
  kNotSuperpattern = 1,
  kParseError = 2,
  kBudgetExceeded = 3,
  kVerificationFailed = 4,
};

struct RunConfig {
  std::string command;
  unsigned d = 3;
  unsigned k = 3;
  std::optional<std::size_t> n;
  std::size_t n_from = 7;
  std::size_t n_to = 14;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::uint64_t budget = 0;
  std::string format = "csv";
  std::string out;

  std::string word;
  std::string filter = "strict-minimal";
  std::string scope = "upto-iso";
  std::string mode;
  std::string suite;
  std::string fixtures = SUPERPAT_FIXTURE_DIR;
  std::string summary;
  std::size_t minimal_to = 14;
  unsigned digits = 12;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline void render(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
  } else if (format == "plain") {
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
  } else {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
      os << '\n';
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
  }
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string join_patterns(const std::vector<Pattern>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + p.str();
  return s;
}

inline SearchBudget budget_of(const RunConfig& cfg) {
  if (cfg.budget != 0) return {cfg.budget};
  if (const char* env = std::getenv("SUPERPATTERN_BUDGET")) {
    try {
      return {std::stoull(env)};
    } catch (const std::exception&) {
      throw ParseError(std::string("SUPERPATTERN_BUDGET is not an integer: ") + env);
    }
  }
  return {};
}

inline int cmd_check(const RunConfig& cfg, std::ostream& os) {
  const Word w = Word::parse(cfg.word, cfg.d);
  ClassFlags flags;
  std::string minimum;
  try {
    flags = classify(w, cfg.k, budget_of(cfg));
    minimum = yes_no(flags.minimum);
  } catch (const BudgetExceeded&) {
    flags = classify(w, cfg.k, std::size_t{0});
    minimum = "unknown";
  }
  const auto missing = missing_patterns(w, cfg.k);
  Table t{{"word", "k", "superpattern", "minimal", "strict", "minimum", "missing"},
          {{w.str(), std::to_string(cfg.k), yes_no(flags.superpattern), yes_no(flags.minimal), yes_no(flags.strict),
            minimum, join_patterns(missing)}}};
  render(t, cfg.format, os);
  return flags.superpattern ? kOk : kNotSuperpattern;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& os) {
  static const std::map<std::string, WordFilter> filters{{"all", WordFilter::superpattern},
                                                         {"minimal", WordFilter::minimal},
                                                         {"strict", WordFilter::strict},
                                                         {"strict-minimal", WordFilter::strict_minimal}};
  if (!cfg.n) throw ParseError("enumerate requires --n");
  const auto words =
      list_superpatterns(cfg.d, cfg.k, *cfg.n, filters.at(cfg.filter), cfg.scope == "upto-iso", budget_of(cfg));
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["d"] = cfg.d;
    j["k"] = cfg.k;
    j["n"] = *cfg.n;
    j["filter"] = cfg.filter;
    j["scope"] = cfg.scope;
    j["count"] = words.size();
    j["words"] = nlohmann::json::array();
    for (const auto& w : words) j["words"].push_back(w.str());
    os << j.dump(2) << '\n';
  } else {
    for (const auto& w : words) os << w.str() << '\n';
    os << "# count " << words.size() << '\n';
  }
  return kOk;
}

inline int cmd_counts(const RunConfig& cfg, std::ostream& os) {
  const bool exhaustive = cfg.mode == "exhaustive";
  const auto budget = budget_of(cfg);
  Table t{{"n", "gamma_total", "s_mu", "s_a", "s_total", "beta_a", "beta_b", "beta_total"}, {}};
  for (std::size_t n = cfg.n_from; n <= cfg.n_to; ++n) {
    CountReport r;
    if (exhaustive) {
      r.n = n;
      r.minimal_upto_iso = enumerate_minimal_upto_iso(n, budget).size();
      r.strict_minimal_upto_iso = enumerate_strict_minimal_upto_iso(n, budget).size();
      r.strict_total = enumerate_strict_superpatterns(3, 3, n, budget);
      r.strict_upto_iso = r.strict_total / 6;
      const auto failing = count_failing_alternating(n, budget);
      r.failing_type_a = failing.type_a;
      r.failing_type_b = failing.type_b;
      r.failing_total = r.failing_type_a + r.failing_type_b;
    } else {
      r = count_formulas(n);
    }
    t.rows.push_back({std::to_string(n), r.minimal_upto_iso.str(), r.strict_minimal_upto_iso.str(),
                      r.strict_upto_iso.str(), r.strict_total.str(), r.failing_type_a.str(), r.failing_type_b.str(),
                      r.failing_total.str()});
  }
  render(t, cfg.format, os);
  return kOk;
}

inline int cmd_pmf(const RunConfig& cfg, std::ostream& os) {
  const std::size_t n_max = cfg.n.value_or(40);
  const std::string mode = cfg.mode.empty() ? "exact" : cfg.mode;
  const auto budget = budget_of(cfg);
  Table t{{"n", "probability_exact", "probability_decimal", "cumulative_exact"}, {}};
  if (mode == "both") t.header.insert(t.header.end(), {"brute_exact", "match"});
  bool all_match = true;
  BigRational cumulative = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigRational p = mode == "brute" ? brute_force_pmf(cfg.d, cfg.d, n, budget) : closed_form_pmf(cfg.d, n);
    cumulative += p;
    std::vector<std::string> row{std::to_string(n), to_string(p), to_decimal(p, cfg.digits), to_string(cumulative)};
    if (mode == "both") {
      const BigRational brute = brute_force_pmf(cfg.d, cfg.d, n, budget);
      all_match = all_match && brute == p;
      row.push_back(to_string(brute));
      row.push_back(yes_no(brute == p));
    }
    t.rows.push_back(std::move(row));
  }
  const BigRational tail = 1 - cumulative;
  std::vector<std::string> tail_row{"tail", to_string(tail), to_decimal(tail, cfg.digits), "1/1"};
  if (mode == "both") tail_row.insert(tail_row.end(), {"", ""});
  t.rows.push_back(std::move(tail_row));
  render(t, cfg.format, os);
  return all_match ? kOk : kVerificationFailed;
}

inline int cmd_moments(const RunConfig& cfg, std::ostream& os) {
  const auto m = moments_from_gf(generating_function(cfg.d));
  Table t{{"quantity", "exact", "decimal"},
          {{"mean", to_string(m.mean), to_decimal(m.mean, cfg.digits)},
           {"variance", to_string(m.variance), to_decimal(m.variance, cfg.digits)}}};
  render(t, cfg.format, os);
  return kOk;
}

inline int cmd_gf(const RunConfig& cfg, std::ostream& os) {
  const auto series = series_coefficients(generating_function(cfg.d), cfg.n.value_or(40));
  Table t{{"n", "coefficient"}, {}};
  for (std::size_t n = 0; n <= series.order(); ++n) t.rows.push_back({std::to_string(n), to_string(series[n])});
  render(t, cfg.format, os);
  return kOk;
}

inline nlohmann::ordered_json summary_json(const SimSummary& s) {
  nlohmann::ordered_json j;
  j["d"] = s.d;
  j["k"] = s.k;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["mean"] = s.mean;
  j["variance"] = s.variance;
  j["histogram"] = nlohmann::ordered_json::object();
  for (const auto& [n, c] : s.histogram) j["histogram"][std::to_string(n)] = c;
  return j;
}

inline int cmd_simulate(const RunConfig& cfg, std::ostream& os) {
  const auto s = simulate_tau(cfg.d, cfg.k, cfg.trials, cfg.seed, cfg.threads);
  if (!cfg.summary.empty()) {
    std::ofstream f(cfg.summary);
    if (!f) throw ParseError("cannot write " + cfg.summary);
    f << summary_json(s).dump(2) << '\n';
  }
  if (cfg.format == "json") {
    os << summary_json(s).dump(2) << '\n';
  } else if (cfg.format == "plain") {
    os << "d=" << s.d << " k=" << s.k << " trials=" << s.trials << " seed=" << s.seed << '\n'
       << std::setprecision(12) << "mean=" << s.mean << " variance=" << s.variance << '\n';
    for (const auto& [n, c] : s.histogram) os << n << ' ' << c << '\n';
  } else {
    Table t{{"n", "count"}, {}};
    for (const auto& [n, c] : s.histogram) t.rows.push_back({std::to_string(n), std::to_string(c)});
    render(t, cfg.format, os);
  }
  return kOk;
}

inline int cmd_coupons(const RunConfig& cfg, std::ostream& os) {
  const auto e = coupon_expectations(cfg.d, cfg.k);
  Table t{{"quantity", "exact", "decimal"},
          {{"single", to_string(e.single), to_decimal(e.single, cfg.digits)},
           {"all_words", to_string(e.all_words), to_decimal(e.all_words, cfg.digits)}}};
  render(t, cfg.format, os);
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const auto budget = budget_of(cfg);
  Table t{{"check", "result", "detail"}, {}};
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    ok = ok && pass;
    t.rows.push_back({name, pass ? "pass" : "FAIL", detail});
  };

  if (cfg.suite == "lemmas") {
    record("no_superpattern_at_6", enumerate_strict_superpatterns(3, 3, 6, budget) == 0 &&
                                       enumerate_minimal_upto_iso(6, budget).empty(),
           "3^6 words scanned");
    const auto seven = enumerate_strict_minimal_upto_iso(7, budget);
    std::string listed;
    for (const auto& w : seven) listed += (listed.empty() ? "" : " ") + w.str();
    record("seven_at_7", seven.size() == 7, listed);
    for (std::size_t n = 7; n <= cfg.n_to; ++n) {
      std::uint64_t bad = 0;
      const auto total = enumerate_strict_superpatterns(3, 3, n, budget, [&](const Word& w) {
        bad += !has_flanking_pairs(w);
      });
      record("flanking_pairs_n" + std::to_string(n), bad == 0,
             std::to_string(total) + " strict words, " + std::to_string(bad) + " violations");
    }
    for (std::size_t n = 8; n <= cfg.minimal_to; ++n) {
      const auto words = enumerate_strict_minimal_upto_iso(n, budget);
      std::size_t bad = 0;
      for (const auto& w : words) bad += !ends_on_embedded_minimum(w);
      record("embedded_minimum_n" + std::to_string(n), bad == 0,
             std::to_string(words.size()) + " strict minimal words, " + std::to_string(bad) + " violations");
    }
  } else if (cfg.suite == "oeis") {
    const auto a024012 = read_bfile(cfg.fixtures + "/b024012.txt");
    const auto a008865 = read_bfile(cfg.fixtures + "/b008865.txt");
    for (std::size_t n = 7; n <= 15; ++n) {
      const auto r = count_formulas(n);
      const auto li = static_cast<long>(n);
      const BigInt minimal = enumerate_minimal_upto_iso(n, budget).size();
      const BigInt strict_minimal = enumerate_strict_minimal_upto_iso(n, budget).size();
      const bool g = a024012.count(li - 2) && a024012.at(li - 2) == r.minimal_upto_iso && minimal == r.minimal_upto_iso;
      const bool s =
          a008865.count(li - 4) && a008865.at(li - 4) == r.strict_minimal_upto_iso && strict_minimal == r.strict_minimal_upto_iso;
      record("A024012_n" + std::to_string(n), g, "gamma_total=" + r.minimal_upto_iso.str() + " exhaustive=" + minimal.str());
      record("A008865_n" + std::to_string(n), s,
             "s_mu=" + r.strict_minimal_upto_iso.str() + " exhaustive=" + strict_minimal.str());
    }
  } else if (cfg.suite == "four-letter" || cfg.suite == "section4") {
    const auto r = separated_copies_report();
    record("strict_for_k4", r.strict, kSeparatedCopiesWord);
    record("contains_1234", r.contains_all_distinct, "");
    record("no_embedded_minimum", r.minimum_candidates == 0,
           std::to_string(r.candidates) + " length-12 subsequences, " + std::to_string(r.minimum_candidates) +
               " minimum");
  } else {
    throw ParseError("unknown verification suite \"" + cfg.suite + "\"");
  }
  render(t, cfg.format, os);
  return ok ? kOk : kVerificationFailed;
}

inline int dispatch(const RunConfig& cfg, std::ostream& os) {
  if (cfg.command == "check") return cmd_check(cfg, os);
  if (cfg.command == "enumerate") return cmd_enumerate(cfg, os);
  if (cfg.command == "counts") return cmd_counts(cfg, os);
  if (cfg.command == "pmf") return cmd_pmf(cfg, os);
  if (cfg.command == "moments") return cmd_moments(cfg, os);
  if (cfg.command == "gf") return cmd_gf(cfg, os);
  if (cfg.command == "simulate") return cmd_simulate(cfg, os);
  if (cfg.command == "verify") return cmd_verify(cfg, os);
  if (cfg.command == "coupons") return cmd_coupons(cfg, os);
  throw ParseError("unknown command " + cfg.command);
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"Superpattern containment, enumeration and waiting-time distributions"};
  app.fallthrough();
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  app.add_option("--d", cfg.d, "alphabet size")->check(CLI::Range(1u, 255u));
  app.add_option("--k", cfg.k, "pattern length")->check(CLI::Range(1u, kMaxArrangementLength));
  app.add_option("--n", cfg.n, "word length (or series order / pmf n_max)");
  app.add_option("--n-from", cfg.n_from, "first n of a range");
  app.add_option("--n-to", cfg.n_to, "last n of a range");
  app.add_option("--trials", cfg.trials, "simulation trials")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "simulation seed");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  app.add_option("--budget", cfg.budget, "max words per exhaustive scan (0 = default)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json", "plain"}));
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_option("--digits", cfg.digits, "decimal digits in display columns");

  auto* check = app.add_subcommand("check", "classify a word");
  check->add_option("word", cfg.word, "digit string or comma-separated letters")->required();
  auto* enumerate = app.add_subcommand("enumerate", "list superpatterns of length n");
  enumerate->add_option("--filter", cfg.filter)->check(CLI::IsMember({"all", "minimal", "strict", "strict-minimal"}));
  enumerate->add_option("--scope", cfg.scope)->check(CLI::IsMember({"upto-iso", "full"}));
  auto* counts = app.add_subcommand("counts", "ternary count table (n,gamma_total,...)");
  counts->add_option("--mode", cfg.mode, "formula or exhaustive")->check(CLI::IsMember({"formula", "exhaustive"}));
  auto* pmf = app.add_subcommand("pmf", "distribution of tau for d = k = 2 or 3");
  pmf->add_option("--mode", cfg.mode, "exact, brute or both")->check(CLI::IsMember({"exact", "brute", "both"}));
  app.add_subcommand("moments", "mean and variance of tau from the generating function");
  app.add_subcommand("gf", "series coefficients of the generating function");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo histogram of tau");
  simulate->add_option("--summary", cfg.summary, "also write the summary JSON here");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite, "lemmas, oeis or four-letter")->required();
  verify->add_option("--fixtures", cfg.fixtures, "directory holding OEIS b-files");
  verify->add_option("--minimal-to", cfg.minimal_to, "largest n for the embedded-minimum check");
  app.add_subcommand("coupons", "coupon-collector baselines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.out.empty()) return dispatch(cfg, out);
    std::ofstream file(cfg.out);
    if (!file) throw ParseError("cannot write " + cfg.out);
    return dispatch(cfg, file);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

}  // namespace superpat::cli
