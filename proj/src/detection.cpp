#include "coalsim/detection.hpp"

#include <cmath>
#include <stdexcept>

#include "coalsim/qfunc.hpp"

namespace coalsim {
namespace {

thread_local std::uint64_t g_fa_evals = 0;

constexpr double kFaFloor = 1e-300;  // keeps products away from hard zero

double clamp_fa(double fa) {
    if (fa < kFaFloor) return kFaFloor;
    if (fa > 1.0) return 1.0;
    return fa;
}

void check_ctx(const SensingContext& ctx) {
    if (!(ctx.md_budget > 0.0 && ctx.md_budget < 1.0)) {
        throw std::domain_error("sensing: md_budget must lie in (0,1)");
    }
    if (ctx.population < 1) throw std::domain_error("sensing: population must be >= 1");
    if (ctx.num_samples < 1) throw std::domain_error("sensing: num_samples must be >= 1");
}

}  // namespace

std::uint64_t fa_eval_count() { return g_fa_evals; }
void reset_fa_eval_count() { g_fa_evals = 0; }

double coalition_md_target(const SensingContext& ctx, int coalition_size) {
    check_ctx(ctx);
    if (coalition_size < 1 || coalition_size > ctx.population) {
        throw std::domain_error("sensing: coalition size must lie in [1, population]");
    }
    const double frac = static_cast<double>(coalition_size) / ctx.population;
    return 1.0 - std::pow(1.0 - ctx.md_budget, frac);
}

double individual_md_for_rule(double coalition_md, int coalition_size, FusionRule rule) {
    if (!(coalition_md > 0.0 && coalition_md < 1.0)) {
        throw std::domain_error("sensing: coalition md must lie in (0,1)");
    }
    if (coalition_size < 1) throw std::domain_error("sensing: coalition size must be >= 1");
    const double inv = 1.0 / coalition_size;
    if (rule == FusionRule::kAnd) {
        // coalition misses when any member misses
        return 1.0 - std::pow(1.0 - coalition_md, inv);
    }
    // OR: coalition misses only when every member misses
    return std::pow(coalition_md, inv);
}

double detection_threshold(const SensingContext& ctx, int coalition_size) {
    check_ctx(ctx);
    if (ctx.fusion == FusionRule::kAnd) {
        // Split-independent form: the per-member detection requirement is
        // (1 - md_budget)^(1/|S|) no matter how the population partitions.
        return q_inv(std::pow(1.0 - ctx.md_budget, 1.0 / ctx.population));
    }
    const double md_eta = coalition_md_target(ctx, coalition_size);
    return q_inv(1.0 - individual_md_for_rule(md_eta, coalition_size, FusionRule::kOr));
}

double individual_fa_at_threshold(double snr, int num_samples, double threshold) {
    if (snr < 0.0) throw std::domain_error("sensing: snr must be >= 0");
    if (num_samples < 1) throw std::domain_error("sensing: num_samples must be >= 1");
    ++g_fa_evals;
    const double arg =
        std::sqrt(2.0 * snr + 1.0) * threshold + snr * std::sqrt(static_cast<double>(num_samples));
    return q_func(arg);
}

double individual_fa(double snr, int num_samples, double md_individual) {
    return individual_fa_at_threshold(snr, num_samples, q_inv(1.0 - md_individual));
}

double coalition_fa_given_md(double coalition_md, std::span<const double> member_snrs,
                             int num_samples, FusionRule rule) {
    if (member_snrs.empty()) throw std::domain_error("sensing: coalition must be nonempty");
    const int k = static_cast<int>(member_snrs.size());
    const double md_ind = individual_md_for_rule(coalition_md, k, rule);
    const double threshold = q_inv(1.0 - md_ind);
    const bool log_space = k > 20;
    double prod = 1.0, log_sum = 0.0;
    for (double snr : member_snrs) {
        double fa = clamp_fa(individual_fa_at_threshold(snr, num_samples, threshold));
        if (rule == FusionRule::kOr) fa = 1.0 - fa;  // accumulate survival terms
        if (log_space) {
            log_sum += std::log(fa);
        } else {
            prod *= fa;
        }
    }
    const double p = log_space ? std::exp(log_sum) : prod;
    return rule == FusionRule::kAnd ? p : 1.0 - p;
}

double coalition_fa(const SensingContext& ctx, std::span<const double> member_snrs) {
    check_ctx(ctx);
    const int k = static_cast<int>(member_snrs.size());
    const double md_eta = coalition_md_target(ctx, k);
    if (ctx.fusion == FusionRule::kAnd) {
        // Use the split-independent threshold so identical populations give
        // bit-identical member curves regardless of the coalition split.
        const double threshold = detection_threshold(ctx, k);
        const bool log_space = k > 20;
        double prod = 1.0, log_sum = 0.0;
        for (double snr : member_snrs) {
            const double fa =
                clamp_fa(individual_fa_at_threshold(snr, ctx.num_samples, threshold));
            if (log_space) {
                log_sum += std::log(fa);
            } else {
                prod *= fa;
            }
        }
        return log_space ? std::exp(log_sum) : prod;
    }
    return coalition_fa_given_md(md_eta, member_snrs, ctx.num_samples, FusionRule::kOr);
}

ExtremeSplitConditions extreme_split_conditions(double coalition_md, int coalition_size,
                                                std::span<const double> member_snrs,
                                                int num_samples) {
    ExtremeSplitConditions out;
    out.md_small_enough = coalition_md < std::pow(0.5, coalition_size);
    const double or_threshold =
        q_inv(1.0 - individual_md_for_rule(coalition_md, coalition_size, FusionRule::kOr));
    out.thresholds_in_range = true;
    const double root_nu = std::sqrt(static_cast<double>(num_samples));
    for (double snr : member_snrs) {
        const double bound =
            -root_nu * std::pow(2.0 * snr + 1.0, 1.5) / (3.0 * snr + 2.0);
        if (!(or_threshold > bound)) {
            out.thresholds_in_range = false;
            break;
        }
    }
    return out;
}

}  // namespace coalsim
