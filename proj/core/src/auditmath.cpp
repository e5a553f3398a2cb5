#include "vvote/auditmath.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace vvote::auditmath {

double prob_pass_exact(uint64_t population, uint64_t sample, uint64_t fraud) {
  if (sample > population || fraud > population)
    throw std::invalid_argument("prob_pass_exact: S, F must be <= N");
  if (fraud == 0) return 1.0;
  if (sample + fraud > population) return 0.0;
  double p = 1.0;
  for (uint64_t i = 0; i < fraud; ++i) {
    p *= static_cast<double>(population - sample - i) /
         static_cast<double>(population - i);
  }
  return p;
}

double prob_pass_approx(double rate, uint64_t fraud) {
  if (rate < 0.0 || rate > 1.0)
    throw std::invalid_argument("prob_pass_approx: rate outside [0,1]");
  return std::pow(1.0 - rate, static_cast<double>(fraud));
}

double posterior(double prior, double rate, uint64_t fraud) {
  if (prior < 0.0 || prior > 1.0)
    throw std::invalid_argument("posterior: prior outside [0,1]");
  if (prior == 1.0) return 1.0;
  double y = prob_pass_approx(rate, fraud);
  double num = y * prior;
  double den = num + (1.0 - prior);
  if (den == 0.0) return 1.0;
  return num / den;
}

RateResult required_rate(double prior, uint64_t fraud, double confidence) {
  if (confidence <= 0.0 || confidence >= 1.0)
    throw std::invalid_argument("required_rate: confidence outside (0,1)");
  if (prior < 0.0 || prior > 1.0)
    throw std::invalid_argument("required_rate: prior outside [0,1]");
  double target = 1.0 - confidence;
  if (prior <= target) return {true, 0.0};  // already confident enough
  if (prior == 1.0 || fraud == 0) return {false, 1.0};
  // posterior <= 1-c  <=>  (1-r)^F <= (1-q)(1-c)/(q c)
  double x = (1.0 - prior) * target / (prior * confidence);
  if (x >= 1.0) return {true, 0.0};
  double r = 1.0 - std::pow(x, 1.0 / static_cast<double>(fraud));
  if (r < 0.0) r = 0.0;
  if (r > 1.0) r = 1.0;
  return {true, r};
}

RateResult required_rate_no_prior(uint64_t fraud, double confidence) {
  if (confidence <= 0.0 || confidence >= 1.0)
    throw std::invalid_argument(
        "required_rate_no_prior: confidence outside (0,1)");
  if (fraud == 0) return {false, 1.0};
  double x = 1.0 - confidence;
  double r = 1.0 - std::pow(x, 1.0 / static_cast<double>(fraud));
  if (r < 0.0) r = 0.0;
  if (r > 1.0) r = 1.0;
  return {true, r};
}

CombinedStages combine_stages(const std::vector<Stage>& stages) {
  if (stages.empty())
    throw std::invalid_argument("combine_stages: at least one stage");
  CombinedStages out;
  double min_rate = 1.0;
  uint64_t total_fraud = 0;
  for (const Stage& s : stages) {
    out.no_detection_probability *= prob_pass_approx(s.rate, s.fraud);
    min_rate = std::min(min_rate, s.rate);
    total_fraud += s.fraud;
  }
  out.worst_case_bound = prob_pass_approx(min_rate, total_fraud);
  return out;
}

namespace {

void write_table(const std::string& path, const std::string& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("emit_tables: cannot write " + path);
  f << header << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) f << (i ? "\t" : "") << row[i];
    f << "\n";
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::vector<std::string> emit_tables(const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  const std::vector<double> priors = {0.01, 0.05, 0.10, 0.25, 0.50};
  const std::vector<double> rates = {0.005, 0.01, 0.02, 0.03, 0.05, 0.10};
  const std::vector<uint64_t> frauds = {10, 50, 100, 261, 500, 1000};

  {  // posterior at F = 100 over (rate, prior)
    std::vector<std::vector<std::string>> rows;
    for (double r : rates) {
      std::vector<std::string> row = {fmt(r)};
      for (double q : priors) row.push_back(fmt(posterior(q, r, 100)));
      rows.push_back(row);
    }
    std::string path = out_dir + "/posterior_table.tsv";
    write_table(path, "rate\tq=0.01\tq=0.05\tq=0.10\tq=0.25\tq=0.50", rows);
    written.push_back(path);
  }
  for (auto [conf, name] :
       {std::pair<double, const char*>{0.995, "rates_995.tsv"},
        std::pair<double, const char*>{0.95, "rates_95.tsv"}}) {
    std::vector<std::vector<std::string>> rows;
    for (uint64_t f : frauds) {
      std::vector<std::string> row = {std::to_string(f)};
      for (double q : priors)
        row.push_back(fmt(required_rate(q, f, conf).rate));
      rows.push_back(row);
    }
    std::string path = out_dir + "/" + name;
    write_table(path, "F\tq=0.01\tq=0.05\tq=0.10\tq=0.25\tq=0.50", rows);
    written.push_back(path);
  }
  {  // post-hoc chart at q = 0.05
    std::vector<std::vector<std::string>> rows;
    for (double r : rates) {
      std::vector<std::string> row = {fmt(r)};
      for (uint64_t f : frauds) row.push_back(fmt(posterior(0.05, r, f)));
      rows.push_back(row);
    }
    std::string path = out_dir + "/confchart.tsv";
    write_table(path, "rate\tF=10\tF=50\tF=100\tF=261\tF=500\tF=1000", rows);
    written.push_back(path);
  }
  {  // no-prior rates over confidence x F
    const std::vector<double> confs = {0.90, 0.95, 0.99, 0.995};
    std::vector<std::vector<std::string>> rows;
    for (uint64_t f : frauds) {
      std::vector<std::string> row = {std::to_string(f)};
      for (double c : confs)
        row.push_back(fmt(required_rate_no_prior(f, c).rate));
      rows.push_back(row);
    }
    std::string path = out_dir + "/no_prior_rates.tsv";
    write_table(path, "F\tc=0.90\tc=0.95\tc=0.99\tc=0.995", rows);
    written.push_back(path);
  }
  return written;
}

}  // namespace vvote::auditmath
