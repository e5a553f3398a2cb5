#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vvote::auditmath {

/// Exact probability that a uniform sample of S from N ballots contains
/// none of F fraudulent ones, computed in the F-indexed product form
/// prod_{i=0}^{F-1} (N-S-i)/(N-i) for numerical stability.
double prob_pass_exact(uint64_t population, uint64_t sample, uint64_t fraud);

/// Approximation (1-r)^F, valid when F << N.
double prob_pass_approx(double rate, uint64_t fraud);

/// Posterior attack probability given clean sampling:
/// p = (1-r)^F q / ((1-r)^F q + (1-q)).
double posterior(double prior, double rate, uint64_t fraud);

struct RateResult {
  bool feasible = false;
  double rate = 1.0;
};

/// Smallest sampling rate r with posterior(q, r, F) <= 1 - confidence.
/// Closed form r = 1 - x^{1/F} with x = (1-q)(1-c)/(q c), clamped to [0,1].
RateResult required_rate(double prior, uint64_t fraud, double confidence);

/// No-prior variant: smallest r with (1-r)^F <= 1 - confidence.
RateResult required_rate_no_prior(uint64_t fraud, double confidence);

struct Stage {
  double rate = 0.0;
  uint64_t fraud = 0;
};

struct CombinedStages {
  double no_detection_probability = 1.0;  // prod (1-r_i)^{F_i}
  double worst_case_bound = 1.0;          // (1-r_min)^{sum F_i}
};

CombinedStages combine_stages(const std::vector<Stage>& stages);

/// Emits the appendix tables as tab-delimited text files in out_dir:
///   posterior_table.tsv        p(q, r) at F = 100 for a grid of priors
///   rates_995.tsv rates_95.tsv required r over (q, F) grids
///   confchart.tsv              posterior at q = 0.05 over (r, F)
///   no_prior_rates.tsv         rate for confidence over F (no prior)
/// Returns the paths written.
std::vector<std::string> emit_tables(const std::string& out_dir);

}  // namespace vvote::auditmath
