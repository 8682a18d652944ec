#pragma once

#include <numbers>

#include "plasmonq/fock.hpp"

namespace plasmonq {

/// Indistinguishability ceiling of the modeled pair source, calibrated so
/// that the CHSH parameter at the standard angle set and zero delay equals
/// 2.44 (|S| = sqrt(2) * (1 + gamma)).
inline constexpr double kDefaultGammaCap = 2.44 / std::numbers::sqrt2 - 1.0;

/// Down-conversion pair source feeding the fibered splitter. The Bell
/// delay shifts one photon's arrival; a Gaussian spectral envelope of the
/// given bandwidth sets the coherence length that the delay is compared
/// against.
struct PairSourceSpec {
  double center_wavelength_nm{806.0};
  double bandwidth_nm{1.0};
  double bell_delay_um{0.0};

  /// Gaussian coherence-length scale: lambda0^2 / (pi * bandwidth).
  double coherence_length_nm() const;
};

/// Temporal overlap of the two photon wave packets at the splitter:
/// exp(-(delay / coherence_length)^2), in [0, 1], one at zero delay.
double overlap_gamma(const PairSourceSpec& spec);

/// The four-term two-photon state behind the fibered 50:50 splitter, with
/// amplitudes (+1/2, +1/2, -1/2, -1/2) over {H,V in alpha; H in alpha and
/// V in beta; H in beta and V in alpha; H,V in beta}.
PureState full_pair_state();

/// The coincidence-post-selected pair at indistinguishability `gamma`:
/// weight gamma on the singlet (|HV> - |VH>)/sqrt(2) plus weight
/// (1-gamma)/2 on each cross-polarized product. A delayed photon's arrival
/// time reveals its polarization, which kills only the coherence between
/// the two product terms; this mixture is exactly that dephasing.
StateEnsemble post_selected_pair(double gamma);

}  // namespace plasmonq
