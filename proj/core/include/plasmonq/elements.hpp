#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "plasmonq/mode.hpp"

namespace plasmonq {

/// A linear-optical element: a complex matrix acting on mode amplitudes.
/// Sub-unitary matrices model loss; a largest singular value above one
/// (amplification) is rejected at construction.
struct ScatteringElement {
  Eigen::MatrixXcd matrix;
  std::string label;

  /// Validates physicality (largest singular value <= 1 + 1e-12).
  static ScatteringElement checked(Eigen::MatrixXcd matrix, std::string label);

  int dim() const { return static_cast<int>(matrix.rows()); }
  double max_singular_value() const;
};

/// Parameters of the lossy two-groove plasmonic beam splitter.
///
/// `reflectance`/`transmittance` are intensity factors; what is not
/// reflected or transmitted is scattered away (loss()). `phase_diff_deg`
/// is arg(t) - arg(r). `mode_overlap` is the classical spatial overlap of
/// the two beams on the splitter; it damps the interference cross term
/// only, never the single-arm intensities.
struct SpbsSpec {
  double reflectance{0.17};
  double transmittance{0.20};
  double phase_diff_deg{100.0};
  double mode_overlap{0.8};

  double loss() const { return 1.0 - reflectance - transmittance; }
};

/// A projective measurement on Fock states.
///
/// Three kinds:
///  - polarization_at_angle: heralding polarizer on one source path. Acts
///    as the partial inner product with cos(theta)<H| + sin(theta)<V|,
///    consuming the measured path's modes. Terms without exactly one
///    photon on that path are annihilated (no heralding click).
///  - occupation_pattern: exact photon numbers on the listed modes.
///  - coincidence: exactly one photon in each listed path group.
class Projector {
 public:
  enum class Kind { polarization_at_angle, occupation_pattern, coincidence };

  static Projector polarization_at_angle(double theta_deg, Path on);
  static Projector occupation_pattern(
      std::vector<std::pair<ModeId, int>> pattern);
  static Projector coincidence(std::vector<Path> paths);

  Kind kind() const { return kind_; }
  double theta_deg() const;
  Path on_path() const;
  const std::vector<std::pair<ModeId, int>>& pattern() const;
  const std::vector<Path>& paths() const;

 private:
  struct Polarization {
    double theta_deg;
    Path on;
  };
  struct Occupation {
    std::vector<std::pair<ModeId, int>> pattern;
  };
  struct Coincidence {
    std::vector<Path> paths;
  };

  explicit Projector(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::variant<Polarization, Occupation, Coincidence> data_{Polarization{}};
};

/// Balanced 50:50 splitter, symmetric convention:
/// [[1/sqrt2, i/sqrt2], [i/sqrt2, 1/sqrt2]].
ScatteringElement balanced_bs();

/// Polarizing beam splitter routing of the beta photon: (beta,V) -> beta1
/// (reflected), (beta,H) -> beta2 (transmitted), unit amplitudes. Acts on
/// the four modes returned by pbs_route_modes().
ScatteringElement pbs_route();

/// Mode order expected by pbs_route().
std::array<ModeId, 4> pbs_route_modes();

/// Linear polarizer at `theta_deg` from H, as a heralding projector.
Projector polarizer(double theta_deg, Path on = Path::alpha);

/// Lossy symmetric splitter [[t, r], [r, t]] with |t|^2 = transmittance,
/// |r|^2 = reflectance (r real positive) and arg(t) - arg(r) =
/// phase_diff_deg. Throws Unphysical when reflectance + transmittance
/// exceeds one or when the resulting matrix would amplify.
ScatteringElement lossy_bs(const SpbsSpec& spec);

/// Single-mode phase e^{i 2 pi delta / lambda}.
ScatteringElement phase_delay(double delta_nm, double lambda_eff_nm);

/// Single-mode intensity attenuator [sqrt(eta)], eta in [0, 1].
ScatteringElement coupler(double eta);

}  // namespace plasmonq
