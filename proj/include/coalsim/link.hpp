#pragma once
#include <cmath>
#include <stdexcept>

#include "coalsim/scenario.hpp"

namespace coalsim {

namespace detail {
inline void check_su(const NetworkScenario& sc, int su) {
    if (su < 0 || su >= sc.num_sus()) throw std::out_of_range("invalid SU id");
}
inline void check_channel(const NetworkScenario& sc, int channel) {
    if (channel < 0 || channel >= sc.num_channels()) throw std::out_of_range("invalid channel id");
}
}  // namespace detail

/// Received licensed-user SNR per sample at SU `su`'s sensor on `channel`.
inline double pu_su_snr(const NetworkScenario& sc, int su, int channel) {
    detail::check_su(sc, su);
    detail::check_channel(sc, channel);
    const double d = distance(sc.channels[channel].pu_position, sc.sus[su].tx_position);
    if (d == 0.0) throw std::domain_error("coincident nodes: PU/SU distance is zero");
    return sc.radio.tx_power_pu_mw * std::pow(d, -sc.radio.path_loss_exponent) /
           sc.radio.noise_power_mw;
}

/// Link SNR between the pair's own endpoints. Pure path loss, so the value
/// is the same on every channel.
inline double su_link_snr(const NetworkScenario& sc, int su) {
    detail::check_su(sc, su);
    const double d = distance(sc.sus[su].tx_position, sc.sus[su].rx_position);
    if (d == 0.0) throw std::domain_error("coincident nodes: SU pair distance is zero");
    return sc.radio.tx_power_su_mw * std::pow(d, -sc.radio.path_loss_exponent) /
           sc.radio.noise_power_mw;
}

/// Shannon rate of pair `su` on `channel`, in bits/s.
inline double data_rate(const NetworkScenario& sc, int su, int channel) {
    detail::check_channel(sc, channel);
    return sc.channels[channel].bandwidth_hz * std::log2(1.0 + su_link_snr(sc, su));
}

}  // namespace coalsim
