#pragma once
#include <cstdint>
#include <span>

#include "coalsim/scenario.hpp"

namespace coalsim {

/// Running count of individual false-alarm curve evaluations in this thread.
/// The partition-formation engine checks its cost bookkeeping against it.
std::uint64_t fa_eval_count();
void reset_fa_eval_count();

/// Inputs shared by every sensing computation on one channel.
struct SensingContext {
    double md_budget = 0.01;  // integrated miss-detection ceiling for the channel
    int population = 1;       // SUs sharing the channel, |S|
    int num_samples = 5;
    FusionRule fusion = FusionRule::kAnd;
};

/// Miss-detection target of a coalition of `coalition_size` members, sized so
/// that any disjoint cover of the population integrates back to md_budget.
double coalition_md_target(const SensingContext& ctx, int coalition_size);

/// Per-member miss-detection constraint implied by the fusion rule.
/// AND combining spreads the coalition target as 1-(1-md)^(1/k); OR
/// combining as md^(1/k).
double individual_md_for_rule(double coalition_md, int coalition_size, FusionRule rule);

/// Detector threshold for one member of a coalition under `ctx`.
/// For AND fusion this reduces to a form that depends only on the channel
/// population, never on the coalition split.
double detection_threshold(const SensingContext& ctx, int coalition_size);

/// False-alarm probability of a single detector with the given
/// miss-detection constraint. snr is the per-sample licensed-user SNR.
double individual_fa(double snr, int num_samples, double md_individual);

/// Same curve, parameterized by the precomputed threshold.
double individual_fa_at_threshold(double snr, int num_samples, double threshold);

/// Cooperative false-alarm probability of a coalition whose members see
/// `member_snrs`, with the miss-detection target taken from `ctx`.
double coalition_fa(const SensingContext& ctx, std::span<const double> member_snrs);

/// Cooperative false-alarm probability with an explicitly given coalition
/// miss-detection target (bypasses the population-based budget split).
double coalition_fa_given_md(double coalition_md, std::span<const double> member_snrs,
                             int num_samples, FusionRule rule);

/// Technical conditions under which the equal-SNR split is the exact
/// worst case for AND fusion and best case for OR fusion.
struct ExtremeSplitConditions {
    bool md_small_enough = false;       // coalition target below 0.5^k
    bool thresholds_in_range = false;   // OR threshold above the curvature bound
    bool both() const { return md_small_enough && thresholds_in_range; }
};
ExtremeSplitConditions extreme_split_conditions(double coalition_md, int coalition_size,
                                                std::span<const double> member_snrs,
                                                int num_samples);

}  // namespace coalsim
