// Command-line front end: exact n_r computation, theorem range scans,
// congruence verification grids, and list generation.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "knotinv/congruence.hpp"
#include "knotinv/errors.hpp"
#include "knotinv/invariants.hpp"
#include "knotinv/multiplicative.hpp"
#include "knotinv/scan.hpp"
#include "knotinv/wellspaced.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // mathematical disagreement or violation
constexpr int kExitUsage = 2;      // usage or I/O error

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_record(const knotinv::InvariantRecord& rec) {
  std::printf("r: %" PRIu64 "\n", rec.r);
  std::printf("n_r: %s\n", rec.n_r.get_str().c_str());
  std::printf("v2(weighted sum): %" PRIu64 "\n", rec.v2_weighted_sum);
  std::printf("n_r/r integral: %s\n", yes_no(rec.nr_over_r_integral));
  std::printf("2n_r/r integral: %s\n", yes_no(rec.two_nr_over_r_integral));
  std::printf("predicted integral: %s\n", yes_no(rec.predictor_verdict));
  std::printf("agreement: %s\n", yes_no(rec.agreement));
}

int cmd_compute(std::uint64_t r) {
  if (r > 100000) {
    std::fprintf(stderr,
                 "warning: C(3r-1, r-1) at r=%" PRIu64 " has about %" PRIu64
                 " bits; this can take a very long time\n",
                 r, static_cast<std::uint64_t>(2.755 * static_cast<double>(r)));
  }
  const knotinv::MobiusTable mobius = knotinv::sieve_mobius(r);
  print_record(knotinv::integrality_report(r, mobius, &knotinv::predict_integral));
  return kExitOk;
}

struct ScanOptions {
  knotinv::ScanConfig config;
  std::string format = "csv";
};

int cmd_scan(const ScanOptions& opts) {
  knotinv::ScanConfig config = opts.config;
  config.format = opts.format == "json" ? knotinv::ReportFormat::json
                                        : knotinv::ReportFormat::csv;

  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                 config.output_path.c_str());
    return kExitUsage;
  }

  const knotinv::MobiusTable mobius = knotinv::sieve_mobius(config.r_max);
  const knotinv::ScanResult result = knotinv::run_scan(config, mobius);

  if (config.format == knotinv::ReportFormat::json) {
    knotinv::write_json(out, result.records, config.emit_values);
  } else {
    knotinv::write_csv(out, result.records, config.emit_values);
  }
  out.flush();
  if (!out) {
    std::fprintf(stderr, "error: write to '%s' failed\n", config.output_path.c_str());
    return kExitUsage;
  }

  const knotinv::ScanSummary& s = result.summary;
  std::printf("scanned r in [%" PRIu64 ", %" PRIu64 "]: total %" PRIu64
              ", even %" PRIu64 ", even integral %" PRIu64 " (fraction %.6f)\n",
              config.r_min, config.r_max, s.total, s.even_count,
              s.even_integral_count, s.even_integral_fraction);
  auto print_list = [](const char* label, const std::vector<std::uint64_t>& rs) {
    std::printf("%s:", label);
    if (rs.empty()) {
      std::printf(" none\n");
      return;
    }
    for (std::uint64_t r : rs) std::printf(" %" PRIu64, r);
    std::printf("\n");
  };
  print_list("disagreements", s.disagreements);
  print_list("violations", s.violations);
  std::printf("report written to %s\n", config.output_path.c_str());

  return (s.disagreements.empty() && s.violations.empty()) ? kExitOk : kExitViolation;
}

struct VerifyOptions {
  std::string identity;
  // Single-point restrictions; 0 means "not set", grid defaults apply.
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  // Grid bounds; 0 means "identity default".
  std::uint64_t max_p = 0;
  std::uint64_t max_k = 0;
  std::uint64_t max_d = 0;
  bool verbose = false;
};

struct VerifyTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;

  void add(const knotinv::CongruenceReport& rep, bool verbose) {
    ++checked;
    if (!rep.holds) ++failed;
    if (!rep.holds || verbose) {
      std::printf("%s p=%" PRIu64 " k=%" PRIu64 " d=%" PRIu64
                  ": %s (lhs=%s, rhs=%s, modulus=%s)\n",
                  rep.identity.c_str(), rep.p, rep.k, rep.d,
                  rep.holds ? "holds" : "FAILS", rep.lhs.get_str().c_str(),
                  rep.rhs.get_str().c_str(), rep.modulus.get_str().c_str());
    }
  }
};

std::vector<std::uint64_t> grid_values(std::uint64_t fixed, std::uint64_t lo,
                                       std::uint64_t hi) {
  std::vector<std::uint64_t> values;
  if (fixed != 0) {
    values.push_back(fixed);
    return values;
  }
  for (std::uint64_t v = lo; v <= hi; ++v) values.push_back(v);
  return values;
}

int cmd_verify(const VerifyOptions& opts) {
  VerifyTally tally;
  const bool verbose = opts.verbose;

  if (opts.identity == "product" || opts.identity == "harmonic") {
    const std::uint64_t max_p = opts.max_p ? opts.max_p : 13;
    const std::uint64_t max_k = opts.max_k ? opts.max_k : 3;
    const std::uint64_t max_d = opts.max_d ? opts.max_d : 20;
    std::vector<std::uint64_t> ps;
    if (opts.p != 0) {
      ps.push_back(opts.p);
    } else {
      for (std::uint64_t p : knotinv::primes_up_to(max_p)) {
        if (p % 2 == 1) ps.push_back(p);  // p = 2 reachable via --p 2
      }
    }
    for (std::uint64_t p : ps) {
      for (std::uint64_t k : grid_values(opts.k, 1, max_k)) {
        for (std::uint64_t d : grid_values(opts.d, 1, max_d)) {
          if (d % p == 0) continue;
          if (opts.identity == "product") {
            tally.add(knotinv::verify_product_congruence(p, static_cast<unsigned>(k), d),
                      verbose);
          } else {
            // The harmonic sum must vanish mod p^k (pairing argument).
            knotinv::CongruenceReport rep;
            rep.identity = "harmonic";
            rep.p = p;
            rep.k = k;
            rep.d = d;
            mpz_ui_pow_ui(rep.modulus.get_mpz_t(), p, static_cast<unsigned>(k));
            rep.lhs = knotinv::harmonic_sum_mod(p, static_cast<unsigned>(k), d,
                                                static_cast<unsigned>(k));
            rep.rhs = 0;
            rep.holds = rep.lhs == rep.rhs;
            tally.add(rep, verbose);
          }
        }
      }
    }
  } else if (opts.identity == "two-case") {
    const std::uint64_t max_k = opts.max_k ? opts.max_k : 4;
    const std::uint64_t max_d = opts.max_d ? opts.max_d : 99;
    for (std::uint64_t k : grid_values(opts.k, 1, max_k)) {
      for (std::uint64_t d : grid_values(opts.d, 1, max_d)) {
        if (d % 2 == 0) continue;
        tally.add(knotinv::verify_two_case_residue(static_cast<unsigned>(k), d), verbose);
      }
    }
  } else if (opts.identity == "valuation") {
    const std::uint64_t max_d = opts.max_d ? opts.max_d : 10000;
    for (std::uint64_t d : grid_values(opts.d, 1, max_d)) {
      const knotinv::ValuationLemmaReport rep = knotinv::verify_valuation_lemma(d);
      ++tally.checked;
      if (!rep.holds) ++tally.failed;
      if (!rep.holds || verbose) {
        std::printf("valuation d=%" PRIu64
                    ": %s (v2 small=%" PRIu64 ", large=%" PRIu64
                    ", digit formula=%" PRId64 ", well-spaced=%s)\n",
                    rep.d, rep.holds ? "holds" : "FAILS", rep.v_small, rep.v_large,
                    rep.digit_formula, rep.well_spaced ? "yes" : "no");
      }
    }
  } else if (opts.identity == "mod8") {
    const std::uint64_t max_d = opts.max_d ? opts.max_d : 1000;
    for (std::uint64_t d : grid_values(opts.d, 1, max_d)) {
      tally.add(knotinv::verify_mod8_difference(d), verbose);
    }
  } else if (opts.identity == "reduction") {
    const std::uint64_t max_k = opts.max_k ? opts.max_k : 3;
    const std::uint64_t max_r1 = opts.max_d ? opts.max_d : 99;
    const std::uint64_t table_limit = opts.d ? opts.d : max_r1;
    const knotinv::MobiusTable mobius = knotinv::sieve_mobius(table_limit);
    for (std::uint64_t k : grid_values(opts.k, 1, max_k)) {
      for (std::uint64_t r1 : grid_values(opts.d, 1, max_r1)) {
        if (r1 % 2 == 0) continue;
        tally.add(knotinv::verify_reduction(static_cast<unsigned>(k), r1, mobius), verbose);
      }
    }
  }

  std::printf("%s: %" PRIu64 "/%" PRIu64 " checks hold\n", opts.identity.c_str(),
              tally.checked - tally.failed, tally.checked);
  return tally.failed == 0 ? kExitOk : kExitViolation;
}

int cmd_list(const std::string& kind, std::uint64_t limit) {
  std::vector<std::uint64_t> values;
  if (kind == "wellspaced") {
    values = knotinv::enumerate_well_spaced_odd(limit).members;
  } else {
    values = knotinv::primes_with_integral_n2p(limit);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::printf("%s%" PRIu64, i == 0 ? "" : ",", values[i]);
  }
  std::printf("\n");
  return kExitOk;
}

int cmd_stats(std::uint64_t r_min, std::uint64_t r_max) {
  const knotinv::ScanSummary s = knotinv::predictor_stats(r_min, r_max);
  std::printf("r in [%" PRIu64 ", %" PRIu64 "]: total %" PRIu64 ", even %" PRIu64
              ", predicted integral among even %" PRIu64 " (fraction %.6f)\n",
              r_min, r_max, s.total, s.even_count, s.even_integral_count,
              s.even_integral_fraction);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact integrality checks for the Mobius-binomial knot invariants n_r"};
  app.require_subcommand(1);

  // compute
  std::uint64_t compute_r = 0;
  CLI::App* compute = app.add_subcommand("compute", "full report for a single r");
  compute->add_option("r", compute_r, "index r >= 1")
      ->required()
      ->check(CLI::PositiveNumber);

  // scan
  ScanOptions scan_opts;
  bool no_value = false;
  CLI::App* scan = app.add_subcommand("scan", "oracle + predictor sweep over [min, max]");
  scan->add_option("--min", scan_opts.config.r_min, "first r")->check(CLI::PositiveNumber);
  scan->add_option("--max", scan_opts.config.r_max, "last r")
      ->required()
      ->check(CLI::PositiveNumber);
  scan->add_option("--jobs", scan_opts.config.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  scan->add_flag("--no-value", no_value, "omit the n_r decimals from the report");
  scan->add_option("--out", scan_opts.config.output_path, "report file path")->required();
  scan->add_option("--format", scan_opts.format, "report format")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "machine-check one congruence identity");
  verify->add_option("identity", verify_opts.identity, "which identity to check")
      ->required()
      ->check(CLI::IsMember({"product", "two-case", "valuation", "mod8", "harmonic",
                             "reduction"}));
  verify->add_option("--p", verify_opts.p, "fix the prime p");
  verify->add_option("--k", verify_opts.k, "fix the exponent k");
  verify->add_option("--d", verify_opts.d, "fix d (r1 for reduction)");
  verify->add_option("--max-p", verify_opts.max_p, "grid bound for p");
  verify->add_option("--max-k", verify_opts.max_k, "grid bound for k");
  verify->add_option("--max-d", verify_opts.max_d, "grid bound for d (r1 for reduction)");
  verify->add_flag("--verbose", verify_opts.verbose, "print every grid point");

  // list
  std::string list_kind;
  std::uint64_t list_limit = 0;
  CLI::App* list = app.add_subcommand("list", "print a published sequence");
  list->add_option("kind", list_kind, "wellspaced | primes")
      ->required()
      ->check(CLI::IsMember({"wellspaced", "primes"}));
  list->add_option("--limit", list_limit, "inclusive upper bound")
      ->required()
      ->check(CLI::PositiveNumber);

  // stats
  std::uint64_t stats_min = 2, stats_max = 0;
  CLI::App* stats = app.add_subcommand("stats", "predictor-only density sweep");
  stats->add_option("--min", stats_min, "first r")->check(CLI::PositiveNumber);
  stats->add_option("--max", stats_max, "last r")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(compute)) return cmd_compute(compute_r);
    if (app.got_subcommand(scan)) {
      scan_opts.config.emit_values = !no_value;
      return cmd_scan(scan_opts);
    }
    if (app.got_subcommand(verify)) return cmd_verify(verify_opts);
    if (app.got_subcommand(list)) return cmd_list(list_kind, list_limit);
    if (app.got_subcommand(stats)) return cmd_stats(stats_min, stats_max);
  } catch (const knotinv::IntegrityError& e) {
    std::fprintf(stderr, "INTEGRITY VIOLATION: %s\n", e.what());
    return kExitViolation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
