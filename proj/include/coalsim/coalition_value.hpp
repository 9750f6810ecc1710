#pragma once
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace coalsim {

/// Per-coalition data for one channel's partition: the channel availability,
/// and each coalition's cooperative false-alarm probability and size.
struct PartitionInputs {
    double beta = 0.0;
    std::vector<double> block_fa;
    std::vector<int> block_size;

    std::size_t blocks() const { return block_fa.size(); }
    void validate() const;
};

/// Successful-transmission probability of coalition `eta` when simultaneous
/// detections collide: the channel must be idle, eta must not false-alarm,
/// and every other coalition must.
double value_0x(std::size_t eta, const PartitionInputs& in);

/// Successful-transmission probability of coalition `eta` under an ideal
/// MAC that grants each competing SU an equal chance. Exact expectation over
/// all false-alarm outcomes of the other coalitions; refuses when more than
/// 30 other coalitions would be expanded.
double value_1x(std::size_t eta, const PartitionInputs& in);

/// Closed form for the sum of all coalition values under the ideal MAC:
/// beta * (1 - prod of coalition false alarms). Partition-shape independent.
double partition_total_1x_closed_form(const PartitionInputs& in);

/// Term-by-term sum of value_1x over the partition.
double sum_over_partition_1x(const PartitionInputs& in);

/// Closed form for how much coalition `eta` loses when coalitions `x1` and
/// `x2` merge (merged false alarm = product). Nonnegative: a merger
/// elsewhere never helps an outside coalition.
double externality_delta(std::size_t eta, std::size_t x1, std::size_t x2,
                         const PartitionInputs& in);

struct CharacteristicFormReport {
    bool partition_independent = true;
    bool superadditive = true;
    bool grand_coalition_efficient = true;
    std::string detail;
    bool ok() const {
        return partition_independent && superadditive && grand_coalition_efficient;
    }
};

/// Exhaustively verifies, for up to 6 SUs with the given individual false
/// alarms, that the colliding-MAC game collapses to a characteristic-form
/// game: values depend only on membership, merging never hurts, and the
/// grand coalition is efficient. Coalition false alarms are member products.
CharacteristicFormReport check_characteristic_form_0x(double beta,
                                                      std::span<const double> member_fa,
                                                      double tol = 1e-12);

}  // namespace coalsim
