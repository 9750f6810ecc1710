#include "coalsim/scenario.hpp"

#include <stdexcept>

namespace coalsim {

std::string to_string(FusionRule rule) { return rule == FusionRule::kAnd ? "AND" : "OR"; }
std::string to_string(MacModel mac) { return mac == MacModel::kZeroX ? "ZERO_X" : "ONE_X"; }

FusionRule fusion_rule_from_string(const std::string& s) {
    if (s == "AND") return FusionRule::kAnd;
    if (s == "OR") return FusionRule::kOr;
    throw std::invalid_argument("unknown fusion rule: " + s);
}

MacModel mac_model_from_string(const std::string& s) {
    if (s == "ZERO_X" || s == "0/X") return MacModel::kZeroX;
    if (s == "ONE_X" || s == "1/X") return MacModel::kOneX;
    throw std::invalid_argument("unknown MAC model: " + s);
}

namespace {

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument("scenario: " + msg);
}

bool inside(const Point2& p, double side) {
    return p.x >= 0.0 && p.x <= side && p.y >= 0.0 && p.y <= side;
}

Point2 draw_point(double side, Rng& rng) {
    return {rng.uniform(0.0, side), rng.uniform(0.0, side)};
}

}  // namespace

void NetworkScenario::validate() const {
    check(region_side_m > 0.0, "region side must be positive");
    check(!channels.empty(), "at least one channel required");
    check(!sus.empty(), "at least one SU pair required");
    check(radio.sense_power_mw > 0.0 && radio.tx_power_su_mw > 0.0 &&
              radio.tx_power_pu_mw > 0.0 && radio.noise_power_mw > 0.0,
          "all powers must be positive");
    check(radio.md_budget > 0.0 && radio.md_budget < 1.0, "md_budget must lie in (0,1)");
    check(radio.sense_ms > 0.0 && radio.sense_ms < radio.slot_ms,
          "sense duration must lie in (0, slot duration)");
    check(radio.num_samples >= 1, "num_samples must be >= 1");
    for (const auto& ch : channels) {
        check(ch.bandwidth_hz > 0.0, "channel bandwidth must be positive");
        check(ch.availability >= 0.0 && ch.availability <= 1.0,
              "channel availability must lie in [0,1]");
        check(inside(ch.pu_position, region_side_m), "PU position outside region");
    }
    for (const auto& su : sus) {
        check(inside(su.tx_position, region_side_m) && inside(su.rx_position, region_side_m),
              "SU position outside region");
    }
}

namespace {

// Resampling guard: a zero distance between interacting nodes would make the
// path-loss model singular.
bool placement_ok(const NetworkScenario& sc, const SuPair& su) {
    if (distance(su.tx_position, su.rx_position) == 0.0) return false;
    for (const auto& ch : sc.channels) {
        if (distance(ch.pu_position, su.tx_position) == 0.0) return false;
    }
    return true;
}

SuPair draw_su(const NetworkScenario& sc, double side, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        SuPair su{draw_point(side, rng), draw_point(side, rng)};
        if (placement_ok(sc, su)) return su;
    }
    throw std::runtime_error("scenario generation: could not place SU pair");
}

}  // namespace

NetworkScenario generate_scenario(const GenSpec& spec, Rng& rng) {
    NetworkScenario sc;
    sc.region_side_m = spec.region_side_m;
    sc.radio = spec.radio;
    sc.fusion = spec.fusion;
    sc.mac = spec.mac;
    sc.channels.reserve(spec.num_channels);
    for (int n = 0; n < spec.num_channels; ++n) {
        sc.channels.push_back({spec.bandwidth_hz, spec.availability,
                               draw_point(spec.region_side_m, rng)});
    }
    sc.sus.reserve(spec.num_sus);
    for (int m = 0; m < spec.num_sus; ++m) {
        sc.sus.push_back(draw_su(sc, spec.region_side_m, rng));
    }
    sc.validate();
    return sc;
}

void resize_sus(NetworkScenario& sc, int count, const GenSpec& spec, Rng& rng) {
    if (count < 1) throw std::invalid_argument("SU count must stay >= 1");
    if (count < sc.num_sus()) {
        sc.sus.resize(count);
        return;
    }
    while (sc.num_sus() < count) {
        sc.sus.push_back(draw_su(sc, spec.region_side_m, rng));
    }
}

void resize_channels(NetworkScenario& sc, int count, const GenSpec& spec, Rng& rng) {
    if (count < 1) throw std::invalid_argument("channel count must stay >= 1");
    if (count < sc.num_channels()) {
        sc.channels.resize(count);
        return;
    }
    while (sc.num_channels() < count) {
        sc.channels.push_back({spec.bandwidth_hz, spec.availability,
                               draw_point(spec.region_side_m, rng)});
    }
}

namespace {

nlohmann::ordered_json point_to_json(const Point2& p) {
    return nlohmann::ordered_json::array({p.x, p.y});
}

Point2 point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("scenario: position must be a [x, y] array");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::ordered_json scenario_to_json(const NetworkScenario& sc) {
    nlohmann::ordered_json j;
    j["region_side_m"] = sc.region_side_m;
    j["fusion_rule"] = to_string(sc.fusion);
    j["mac_model"] = to_string(sc.mac);
    j["radio"] = {{"sense_power_mw", sc.radio.sense_power_mw},
                  {"tx_power_su_mw", sc.radio.tx_power_su_mw},
                  {"tx_power_pu_mw", sc.radio.tx_power_pu_mw},
                  {"noise_power_mw", sc.radio.noise_power_mw},
                  {"slot_ms", sc.radio.slot_ms},
                  {"sense_ms", sc.radio.sense_ms},
                  {"num_samples", sc.radio.num_samples},
                  {"md_budget", sc.radio.md_budget},
                  {"path_loss_exponent", sc.radio.path_loss_exponent}};
    j["channels"] = nlohmann::ordered_json::array();
    for (const auto& ch : sc.channels) {
        j["channels"].push_back({{"bandwidth_hz", ch.bandwidth_hz},
                                 {"availability", ch.availability},
                                 {"pu_position", point_to_json(ch.pu_position)}});
    }
    j["sus"] = nlohmann::ordered_json::array();
    for (const auto& su : sc.sus) {
        j["sus"].push_back({{"tx_position", point_to_json(su.tx_position)},
                            {"rx_position", point_to_json(su.rx_position)}});
    }
    return j;
}

NetworkScenario scenario_from_json(const nlohmann::json& j) {
    NetworkScenario sc;
    sc.region_side_m = j.at("region_side_m").get<double>();
    sc.fusion = fusion_rule_from_string(j.at("fusion_rule").get<std::string>());
    sc.mac = mac_model_from_string(j.at("mac_model").get<std::string>());
    const auto& r = j.at("radio");
    sc.radio.sense_power_mw = r.at("sense_power_mw").get<double>();
    sc.radio.tx_power_su_mw = r.at("tx_power_su_mw").get<double>();
    sc.radio.tx_power_pu_mw = r.at("tx_power_pu_mw").get<double>();
    sc.radio.noise_power_mw = r.at("noise_power_mw").get<double>();
    sc.radio.slot_ms = r.at("slot_ms").get<double>();
    sc.radio.sense_ms = r.at("sense_ms").get<double>();
    sc.radio.num_samples = r.at("num_samples").get<int>();
    sc.radio.md_budget = r.at("md_budget").get<double>();
    sc.radio.path_loss_exponent = r.at("path_loss_exponent").get<double>();
    for (const auto& cj : j.at("channels")) {
        sc.channels.push_back({cj.at("bandwidth_hz").get<double>(),
                               cj.at("availability").get<double>(),
                               point_from_json(cj.at("pu_position"))});
    }
    for (const auto& sj : j.at("sus")) {
        sc.sus.push_back({point_from_json(sj.at("tx_position")),
                          point_from_json(sj.at("rx_position"))});
    }
    sc.validate();
    return sc;
}

}  // namespace coalsim
