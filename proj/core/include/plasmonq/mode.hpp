#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace plasmonq {

/// Spatial paths of the apparatus. `alpha` and `beta` are the two fibered
/// source outputs (polarized photons), `beta1`/`beta2` the photonic arms
/// behind the polarizing beam splitter, `spp1`/`spp2` the plasmonic arms,
/// `out_a`/`out_b` the detector ports, and `loss` a generic sink.
enum class Path : std::uint8_t {
  alpha,
  beta,
  beta1,
  beta2,
  spp1,
  spp2,
  out_a,
  out_b,
  loss,
};

/// Polarization label of a mode. Path-encoded modes carry `none`.
enum class Pol : std::uint8_t { H, V, none };

/// A single optical or plasmonic mode: spatial path plus polarization.
struct ModeId {
  Path path{Path::alpha};
  Pol pol{Pol::none};

  friend constexpr auto operator<=>(const ModeId&, const ModeId&) = default;
};

/// True for paths whose polarization degree of freedom has been converted
/// to a path degree of freedom (beta1..out_b) or absorbed (loss).
constexpr bool is_path_encoded(Path path) {
  return path != Path::alpha && path != Path::beta;
}

/// Polarization rule: source paths carry H or V, path-encoded modes carry
/// `none`.
constexpr bool is_valid_mode(ModeId mode) {
  if (is_path_encoded(mode.path)) return mode.pol == Pol::none;
  return mode.pol == Pol::H || mode.pol == Pol::V;
}

std::string to_string(Path path);
std::string to_string(ModeId mode);

inline constexpr ModeId kAlphaH{Path::alpha, Pol::H};
inline constexpr ModeId kAlphaV{Path::alpha, Pol::V};
inline constexpr ModeId kBetaH{Path::beta, Pol::H};
inline constexpr ModeId kBetaV{Path::beta, Pol::V};
inline constexpr ModeId kBeta1{Path::beta1, Pol::none};
inline constexpr ModeId kBeta2{Path::beta2, Pol::none};
inline constexpr ModeId kSpp1{Path::spp1, Pol::none};
inline constexpr ModeId kSpp2{Path::spp2, Pol::none};
inline constexpr ModeId kOutA{Path::out_a, Pol::none};
inline constexpr ModeId kOutB{Path::out_b, Pol::none};
inline constexpr ModeId kLoss{Path::loss, Pol::none};

}  // namespace plasmonq
