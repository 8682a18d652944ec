#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "plasmonq/elements.hpp"
#include "plasmonq/mode.hpp"

namespace plasmonq {

using Complex = std::complex<double>;

/// The experiment handles one photon pair; two quanta is the hard cap.
inline constexpr int kMaxPhotons = 2;

/// Absolute per-amplitude tolerance used for physicality checks.
inline constexpr double kNormSlack = 1e-12;

/// Amplitudes below this magnitude are pruned when states are assembled.
inline constexpr double kAmplitudeEpsilon = 1e-15;

/// One Fock basis ket: photon occupation numbers over a fixed mode list.
/// Total occupation is capped at kMaxPhotons; the mode list may track
/// empty modes (they define the space the state lives in).
class FockBasisState {
 public:
  FockBasisState() = default;
  FockBasisState(std::initializer_list<std::pair<ModeId, int>> occupations);
  explicit FockBasisState(std::vector<std::pair<ModeId, int>> occupations);

  const std::vector<ModeId>& modes() const { return modes_; }
  const std::vector<int>& occupations() const { return occ_; }

  /// Occupation of `mode`, zero when the mode is not tracked.
  int occupation(ModeId mode) const;
  bool tracks(ModeId mode) const;
  int total_photons() const;

  friend bool operator==(const FockBasisState&, const FockBasisState&) =
      default;

 private:
  friend class PureState;
  std::vector<ModeId> modes_;
  std::vector<int> occ_;
};

struct Term {
  Complex amplitude;
  FockBasisState basis;
};

/// A (possibly sub-normalized) pure few-photon state: a merged, pruned,
/// canonically ordered list of weighted Fock basis kets over one shared
/// mode list. norm_squared() <= 1; values below one represent surviving
/// branches after loss or post-selection.
class PureState {
 public:
  PureState() = default;

  std::span<const Term> terms() const { return terms_; }
  const std::vector<ModeId>& modes() const { return modes_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  double norm_squared() const { return norm_squared_; }

  /// Amplitude of `basis` (which must live on the same mode list).
  Complex amplitude_of(const FockBasisState& basis) const;

  /// Unit-norm copy; DomainError on the zero state.
  PureState normalized() const;

  /// Amplitude-wise scaling (norm_squared scales by |factor|^2).
  PureState scaled(Complex factor) const;

 private:
  friend PureState make_pure(std::vector<Term> terms);
  friend PureState make_pure_over(std::vector<ModeId> modes,
                                  std::vector<Term> terms);

  std::vector<Term> terms_;
  std::vector<ModeId> modes_;
  double norm_squared_{0.0};
};

/// Builds a PureState: validates the shared mode list, merges duplicate
/// basis states, prunes vanishing amplitudes. Throws ModeMismatch when
/// terms disagree on the mode list, DomainError on non-finite amplitudes
/// or norm_squared > 1 + 1e-12.
PureState make_pure(std::vector<Term> terms);

/// As make_pure, but pins the mode list explicitly so that the zero state
/// (no terms) still knows the space it lives in.
PureState make_pure_over(std::vector<ModeId> modes, std::vector<Term> terms);

/// An incoherent mixture of pure states. Probabilities add across
/// branches; amplitudes never mix. Total weight (sum of weight times
/// norm_squared) is at most one.
class StateEnsemble {
 public:
  struct Branch {
    double weight;
    PureState state;
  };

  StateEnsemble() = default;
  explicit StateEnsemble(std::vector<Branch> branches);

  static StateEnsemble pure(PureState state);

  std::span<const Branch> branches() const { return branches_; }
  std::size_t branch_count() const { return branches_.size(); }

  /// Sum over branches of weight * norm_squared.
  double total_weight() const;

  /// Scales branch weights so that total_weight() == 1.
  StateEnsemble normalized() const;

 private:
  std::vector<Branch> branches_;
};

/// Result of projecting a pure state: the unnormalized surviving state and
/// its probability relative to the input norm.
struct Projection {
  PureState state;
  double probability;
};

/// Result of projecting an ensemble branch-by-branch.
struct EnsembleProjection {
  StateEnsemble state;
  double probability;
};

/// Applies a scattering element to the listed modes: every creation
/// operator on listed mode j becomes sum_i matrix(i, j) times the creation
/// operator on listed mode i; unlisted modes pass through. Throws
/// ModeMismatch when the element dimension and the mode list disagree or a
/// listed mode is not tracked by the state.
PureState apply_scattering(const PureState& state,
                           const ScatteringElement& element,
                           std::span<const ModeId> modes);

/// Projects without renormalizing; a zero-probability projection returns
/// the zero state. Renormalization is a separate, explicit step.
Projection project(const PureState& state, const Projector& projector);
EnsembleProjection project(const StateEnsemble& ensemble,
                           const Projector& projector);

/// Probability of the projector outcome on the ensemble.
double probability_of(const StateEnsemble& ensemble,
                      const Projector& projector);
double probability_of(const PureState& state, const Projector& projector);

/// Extends the mode list with `extra` modes at zero occupation.
PureState with_modes(const PureState& state, std::span<const ModeId> extra);

/// Restricts the mode list to `keep`; DomainError if a dropped mode is
/// occupied in any term.
PureState restricted_to(const PureState& state, std::span<const ModeId> keep);

/// Renames modes; targets must be valid and must not collide with modes
/// that stay.
PureState relabeled(const PureState& state,
                    std::span<const std::pair<ModeId, ModeId>> renames);

/// Full dephasing in the Fock basis: each basis term becomes its own
/// branch with weight |amplitude|^2.
StateEnsemble dephased(const PureState& state);

}  // namespace plasmonq
