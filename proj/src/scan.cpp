#include "knotinv/scan.hpp"

#include <json.hpp>

#include <atomic>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "knotinv/errors.hpp"
#include "knotinv/wellspaced.hpp"

namespace knotinv {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

ScanResult run_scan(const ScanConfig& config, const MobiusTable& mobius) {
  if (config.r_min == 0 || config.r_min > config.r_max) {
    throw std::domain_error("run_scan: need 1 <= r_min <= r_max");
  }
  if (config.parallelism == 0) throw std::domain_error("run_scan: parallelism must be >= 1");
  if (mobius.limit() < config.r_max) throw std::domain_error("run_scan: Mobius table too small");

  const std::uint64_t count = config.r_max - config.r_min + 1;
  std::vector<std::optional<InvariantRecord>> slots(count);
  std::vector<std::uint8_t> violated(count, 0);

  TermCache cache;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      const std::uint64_t r = config.r_min + i;
      try {
        slots[i] = integrality_report(r, mobius, &predict_integral, &cache);
      } catch (const IntegrityError&) {
        violated[i] = 1;
      }
    }
  };

  const unsigned jobs = static_cast<unsigned>(
      std::min<std::uint64_t>(config.parallelism, count));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Merge in r order: the output is a pure function of the range.
  ScanResult result;
  result.records.reserve(count);
  result.summary.total = count;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t r = config.r_min + i;
    if (violated[i]) {
      result.summary.violations.push_back(r);
      continue;
    }
    InvariantRecord& rec = *slots[i];
    if (r % 2 == 0) {
      ++result.summary.even_count;
      if (rec.nr_over_r_integral) ++result.summary.even_integral_count;
    }
    if (!rec.agreement) result.summary.disagreements.push_back(r);
    result.records.push_back(std::move(rec));
  }
  if (result.summary.even_count > 0) {
    result.summary.even_integral_fraction =
        static_cast<double>(result.summary.even_integral_count) /
        static_cast<double>(result.summary.even_count);
  }
  return result;
}

void write_csv(std::ostream& out, const std::vector<InvariantRecord>& records,
               bool emit_values) {
  out << "r,n_r,v2_weighted_sum,nr_over_r,two_nr_over_r,predicted,agreement\n";
  for (const auto& rec : records) {
    out << rec.r << ',';
    if (emit_values) out << rec.n_r.get_str();
    out << ',' << rec.v2_weighted_sum << ',' << bool_str(rec.nr_over_r_integral)
        << ',' << bool_str(rec.two_nr_over_r_integral) << ','
        << bool_str(rec.predictor_verdict) << ',' << bool_str(rec.agreement)
        << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<InvariantRecord>& records,
                bool emit_values) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& rec : records) {
    nlohmann::ordered_json item;
    item["r"] = std::to_string(rec.r);
    if (emit_values) {
      item["n_r"] = rec.n_r.get_str();
    } else {
      item["n_r"] = nullptr;
    }
    item["v2_of_weighted_sum"] = std::to_string(rec.v2_weighted_sum);
    item["nr_over_r_integral"] = rec.nr_over_r_integral;
    item["two_nr_over_r_integral"] = rec.two_nr_over_r_integral;
    item["predictor_verdict"] = rec.predictor_verdict;
    item["agreement"] = rec.agreement;
    doc.push_back(std::move(item));
  }
  out << doc.dump(2) << '\n';
}

ScanSummary predictor_stats(std::uint64_t r_min, std::uint64_t r_max) {
  if (r_min == 0 || r_min > r_max) {
    throw std::domain_error("predictor_stats: need 1 <= r_min <= r_max");
  }
  ScanSummary summary;
  summary.total = r_max - r_min + 1;
  for (std::uint64_t r = r_min; r <= r_max; ++r) {
    if (r % 2 != 0) continue;
    ++summary.even_count;
    if (predict_integral(r)) ++summary.even_integral_count;
  }
  if (summary.even_count > 0) {
    summary.even_integral_fraction =
        static_cast<double>(summary.even_integral_count) /
        static_cast<double>(summary.even_count);
  }
  return summary;
}

}  // namespace knotinv
