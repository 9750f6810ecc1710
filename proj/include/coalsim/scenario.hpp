#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "coalsim/geometry.hpp"
#include "coalsim/rng.hpp"

namespace coalsim {

/// Combining rule for sensing reports shared within a coalition.
enum class FusionRule { kAnd, kOr };

/// MAC behavior when several coalitions detect the same idle slot:
/// all colliders fail (0/X) or an ideal MAC grants one winner (1/X).
enum class MacModel { kZeroX, kOneX };

std::string to_string(FusionRule rule);
std::string to_string(MacModel mac);
FusionRule fusion_rule_from_string(const std::string& s);
MacModel mac_model_from_string(const std::string& s);

struct RadioParams {
    double sense_power_mw = 10.0;
    double tx_power_su_mw = 10.0;
    double tx_power_pu_mw = 100.0;
    double noise_power_mw = 0.1;
    double slot_ms = 100.0;
    double sense_ms = 5.0;
    int num_samples = 5;            // sensing samples per slot
    double md_budget = 0.01;        // per-channel miss-detection ceiling
    double path_loss_exponent = 2.0;
};

struct Channel {
    double bandwidth_hz = 10e6;
    double availability = 0.2;      // probability the licensed channel is idle
    Point2 pu_position;
};

/// A secondary transmitter-receiver pair. The transmitter endpoint hosts
/// the sensor, so licensed-user distances are measured from it.
struct SuPair {
    Point2 tx_position;
    Point2 rx_position;
};

struct NetworkScenario {
    double region_side_m = 100.0;
    RadioParams radio;
    std::vector<Channel> channels;
    std::vector<SuPair> sus;
    FusionRule fusion = FusionRule::kAnd;
    MacModel mac = MacModel::kZeroX;

    int num_channels() const { return static_cast<int>(channels.size()); }
    int num_sus() const { return static_cast<int>(sus.size()); }

    /// Throws std::invalid_argument when any field violates its constraints.
    void validate() const;
};

/// Parameters for random uniform placement of all nodes in the region.
struct GenSpec {
    int num_sus = 10;
    int num_channels = 5;
    double region_side_m = 100.0;
    double bandwidth_hz = 10e6;
    double availability = 0.2;
    RadioParams radio;
    FusionRule fusion = FusionRule::kAnd;
    MacModel mac = MacModel::kZeroX;
};

/// Draws node positions uniformly in the region. Placements that would put
/// two interacting nodes at zero distance are resampled.
NetworkScenario generate_scenario(const GenSpec& spec, Rng& rng);

/// Appends freshly placed SU pairs / channels, or truncates, so that the
/// scenario matches the requested count. Used by mid-run population events.
void resize_sus(NetworkScenario& sc, int count, const GenSpec& spec, Rng& rng);
void resize_channels(NetworkScenario& sc, int count, const GenSpec& spec, Rng& rng);

nlohmann::ordered_json scenario_to_json(const NetworkScenario& sc);
NetworkScenario scenario_from_json(const nlohmann::json& j);

}  // namespace coalsim
