#include "plasmonq/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plasmonq/errors.hpp"

namespace plasmonq {

namespace {

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

bool occ_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

FockBasisState::FockBasisState(
    std::initializer_list<std::pair<ModeId, int>> occupations)
    : FockBasisState(std::vector<std::pair<ModeId, int>>(occupations)) {}

FockBasisState::FockBasisState(
    std::vector<std::pair<ModeId, int>> occupations) {
  std::sort(occupations.begin(), occupations.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int total = 0;
  modes_.reserve(occupations.size());
  occ_.reserve(occupations.size());
  for (const auto& [mode, count] : occupations) {
    if (!is_valid_mode(mode)) {
      throw DomainError("invalid mode '" + to_string(mode) +
                        "': path-encoded modes carry no polarization");
    }
    if (!modes_.empty() && modes_.back() == mode) {
      throw DomainError("duplicate mode '" + to_string(mode) +
                        "' in basis state");
    }
    if (count < 0) {
      throw DomainError("negative occupation on mode '" + to_string(mode) +
                        "'");
    }
    total += count;
    modes_.push_back(mode);
    occ_.push_back(count);
  }
  if (total > kMaxPhotons) {
    throw DomainError("total photon number " + std::to_string(total) +
                      " exceeds the cap of " + std::to_string(kMaxPhotons));
  }
}

int FockBasisState::occupation(ModeId mode) const {
  auto it = std::lower_bound(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end() || *it != mode) return 0;
  return occ_[static_cast<std::size_t>(it - modes_.begin())];
}

bool FockBasisState::tracks(ModeId mode) const {
  return std::binary_search(modes_.begin(), modes_.end(), mode);
}

int FockBasisState::total_photons() const {
  int total = 0;
  for (int n : occ_) total += n;
  return total;
}

Complex PureState::amplitude_of(const FockBasisState& basis) const {
  if (basis.modes() != modes_) {
    throw ModeMismatch("amplitude_of: basis state lives on a different mode list");
  }
  for (const Term& term : terms_) {
    if (term.basis.occupations() == basis.occupations()) return term.amplitude;
  }
  return Complex{0.0, 0.0};
}

PureState PureState::normalized() const {
  if (norm_squared_ <= 0.0) {
    throw DomainError("cannot normalize the zero state");
  }
  return scaled(1.0 / std::sqrt(norm_squared_));
}

PureState PureState::scaled(Complex factor) const {
  std::vector<Term> terms = terms_;
  for (Term& term : terms) term.amplitude *= factor;
  return make_pure_over(modes_, std::move(terms));
}

PureState make_pure_over(std::vector<ModeId> modes, std::vector<Term> terms) {
  for (const Term& term : terms) {
    if (term.basis.modes() != modes) {
      throw ModeMismatch("terms do not share one mode list");
    }
    if (!std::isfinite(term.amplitude.real()) ||
        !std::isfinite(term.amplitude.imag())) {
      throw DomainError("non-finite amplitude");
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return occ_less(a.basis.occupations(), b.basis.occupations());
  });

  PureState state;
  state.modes_ = std::move(modes);
  for (Term& term : terms) {
    if (!state.terms_.empty() &&
        state.terms_.back().basis.occupations() == term.basis.occupations()) {
      state.terms_.back().amplitude += term.amplitude;
    } else {
      state.terms_.push_back(std::move(term));
    }
  }
  std::erase_if(state.terms_, [](const Term& term) {
    return std::abs(term.amplitude) < kAmplitudeEpsilon;
  });

  double norm2 = 0.0;
  for (const Term& term : state.terms_) norm2 += std::norm(term.amplitude);
  if (norm2 > 1.0 + kNormSlack) {
    throw DomainError("norm_squared " + std::to_string(norm2) +
                      " exceeds one");
  }
  state.norm_squared_ = norm2;
  return state;
}

PureState make_pure(std::vector<Term> terms) {
  if (terms.empty()) return PureState{};
  std::vector<ModeId> modes = terms.front().basis.modes();
  return make_pure_over(std::move(modes), std::move(terms));
}

StateEnsemble::StateEnsemble(std::vector<Branch> branches) {
  double total = 0.0;
  for (const Branch& branch : branches) {
    if (!(branch.weight >= 0.0) || !std::isfinite(branch.weight)) {
      throw DomainError("branch weights must be finite and non-negative");
    }
    total += branch.weight * branch.state.norm_squared();
  }
  if (total > 1.0 + kNormSlack) {
    throw DomainError("ensemble total weight " + std::to_string(total) +
                      " exceeds one");
  }
  for (Branch& branch : branches) {
    if (branch.weight * branch.state.norm_squared() > 0.0) {
      branches_.push_back(std::move(branch));
    }
  }
}

StateEnsemble StateEnsemble::pure(PureState state) {
  return StateEnsemble({Branch{1.0, std::move(state)}});
}

double StateEnsemble::total_weight() const {
  double total = 0.0;
  for (const Branch& branch : branches_) {
    total += branch.weight * branch.state.norm_squared();
  }
  return total;
}

StateEnsemble StateEnsemble::normalized() const {
  const double total = total_weight();
  if (total <= 0.0) {
    throw DomainError("cannot normalize an empty ensemble");
  }
  std::vector<Branch> branches(branches_.begin(), branches_.end());
  for (Branch& branch : branches) branch.weight /= total;
  return StateEnsemble(std::move(branches));
}

namespace {

// Occupation pattern over the listed-slot subspace, paired with the
// accumulated expansion coefficient.
struct Monomial {
  std::vector<int> occ;
  Complex coeff;
};

std::size_t index_of(const std::vector<ModeId>& modes, ModeId mode) {
  auto it = std::lower_bound(modes.begin(), modes.end(), mode);
  if (it == modes.end() || *it != mode) {
    throw ModeMismatch("mode '" + to_string(mode) +
                       "' is not tracked by the state");
  }
  return static_cast<std::size_t>(it - modes.begin());
}

}  // namespace

PureState apply_scattering(const PureState& state,
                           const ScatteringElement& element,
                           std::span<const ModeId> modes) {
  const int n = static_cast<int>(modes.size());
  if (element.dim() != n) {
    throw ModeMismatch("element '" + element.label + "' has dimension " +
                       std::to_string(element.dim()) + " but " +
                       std::to_string(n) + " modes were listed");
  }
  std::vector<std::size_t> slot(modes.size());
  for (std::size_t j = 0; j < modes.size(); ++j) {
    slot[j] = index_of(state.modes(), modes[j]);
  }

  std::vector<Term> out;
  for (const Term& term : state.terms()) {
    std::vector<int> base = term.basis.occupations();
    // Pull the photons off the listed modes; they re-enter through the
    // element's columns.
    std::vector<int> in_occ(modes.size());
    double in_factorials = 1.0;
    for (std::size_t j = 0; j < modes.size(); ++j) {
      in_occ[j] = base[slot[j]];
      base[slot[j]] = 0;
      in_factorials *= factorial(in_occ[j]);
    }

    std::vector<Monomial> expansion{{std::vector<int>(modes.size(), 0), 1.0}};
    for (std::size_t j = 0; j < modes.size(); ++j) {
      for (int photon = 0; photon < in_occ[j]; ++photon) {
        std::vector<Monomial> next;
        for (const Monomial& mono : expansion) {
          for (int i = 0; i < n; ++i) {
            const Complex coeff =
                mono.coeff * element.matrix(i, static_cast<int>(j));
            if (coeff == Complex{0.0, 0.0}) continue;
            Monomial grown{mono.occ, coeff};
            grown.occ[static_cast<std::size_t>(i)] += 1;
            bool merged = false;
            for (Monomial& existing : next) {
              if (existing.occ == grown.occ) {
                existing.coeff += grown.coeff;
                merged = true;
                break;
              }
            }
            if (!merged) next.push_back(std::move(grown));
          }
        }
        expansion = std::move(next);
      }
    }

    for (const Monomial& mono : expansion) {
      double out_factorials = 1.0;
      std::vector<int> occ = base;
      for (std::size_t j = 0; j < modes.size(); ++j) {
        occ[slot[j]] = mono.occ[j];
        out_factorials *= factorial(mono.occ[j]);
      }
      const Complex amplitude =
          term.amplitude * mono.coeff *
          std::sqrt(out_factorials / in_factorials);
      std::vector<std::pair<ModeId, int>> pairs;
      pairs.reserve(occ.size());
      for (std::size_t k = 0; k < occ.size(); ++k) {
        pairs.emplace_back(state.modes()[k], occ[k]);
      }
      out.push_back(Term{amplitude, FockBasisState(std::move(pairs))});
    }
  }
  return make_pure_over(state.modes(), std::move(out));
}

namespace {

Projection project_polarization(const PureState& state, double theta_deg,
                                Path on) {
  const ModeId mode_h{on, Pol::H};
  const ModeId mode_v{on, Pol::V};
  const double theta = deg2rad(theta_deg);
  const double cos_t = std::cos(theta);
  const double sin_t = std::sin(theta);

  std::vector<ModeId> kept;
  for (ModeId mode : state.modes()) {
    if (mode != mode_h && mode != mode_v) kept.push_back(mode);
  }
  std::vector<Term> out;
  for (const Term& term : state.terms()) {
    const int n_h = term.basis.occupation(mode_h);
    const int n_v = term.basis.occupation(mode_v);
    if (n_h + n_v != 1) continue;  // no heralding click
    const double factor = (n_h == 1) ? cos_t : sin_t;
    std::vector<std::pair<ModeId, int>> pairs;
    pairs.reserve(kept.size());
    for (ModeId mode : kept) {
      pairs.emplace_back(mode, term.basis.occupation(mode));
    }
    out.push_back(
        Term{term.amplitude * factor, FockBasisState(std::move(pairs))});
  }
  PureState projected = make_pure_over(std::move(kept), std::move(out));
  const double probability = projected.norm_squared();
  return Projection{std::move(projected), probability};
}

Projection project_filter(const PureState& state, const Projector& projector) {
  std::vector<Term> out;
  double probability = 0.0;
  for (const Term& term : state.terms()) {
    bool match = true;
    if (projector.kind() == Projector::Kind::occupation_pattern) {
      for (const auto& [mode, count] : projector.pattern()) {
        if (term.basis.occupation(mode) != count) {
          match = false;
          break;
        }
      }
    } else {
      for (Path path : projector.paths()) {
        int in_path = 0;
        for (std::size_t k = 0; k < term.basis.modes().size(); ++k) {
          if (term.basis.modes()[k].path == path) {
            in_path += term.basis.occupations()[k];
          }
        }
        if (in_path != 1) {
          match = false;
          break;
        }
      }
    }
    if (match) {
      probability += std::norm(term.amplitude);
      out.push_back(term);
    }
  }
  return Projection{make_pure_over(state.modes(), std::move(out)),
                    probability};
}

}  // namespace

Projection project(const PureState& state, const Projector& projector) {
  if (projector.kind() == Projector::Kind::polarization_at_angle) {
    return project_polarization(state, projector.theta_deg(),
                                projector.on_path());
  }
  return project_filter(state, projector);
}

EnsembleProjection project(const StateEnsemble& ensemble,
                           const Projector& projector) {
  std::vector<StateEnsemble::Branch> branches;
  double probability = 0.0;
  for (const auto& branch : ensemble.branches()) {
    Projection p = project(branch.state, projector);
    probability += branch.weight * p.probability;
    if (p.probability > 0.0) {
      branches.push_back({branch.weight, std::move(p.state)});
    }
  }
  return EnsembleProjection{StateEnsemble(std::move(branches)), probability};
}

double probability_of(const PureState& state, const Projector& projector) {
  return project(state, projector).probability;
}

double probability_of(const StateEnsemble& ensemble,
                      const Projector& projector) {
  double probability = 0.0;
  for (const auto& branch : ensemble.branches()) {
    probability += branch.weight * project(branch.state, projector).probability;
  }
  return probability;
}

PureState with_modes(const PureState& state, std::span<const ModeId> extra) {
  std::vector<ModeId> modes = state.modes();
  for (ModeId mode : extra) {
    if (!is_valid_mode(mode)) {
      throw DomainError("invalid mode '" + to_string(mode) + "'");
    }
    if (std::find(modes.begin(), modes.end(), mode) == modes.end()) {
      modes.push_back(mode);
    }
  }
  std::sort(modes.begin(), modes.end());

  std::vector<Term> out;
  out.reserve(state.terms().size());
  for (const Term& term : state.terms()) {
    std::vector<std::pair<ModeId, int>> pairs;
    pairs.reserve(modes.size());
    for (ModeId mode : modes) {
      pairs.emplace_back(mode, term.basis.occupation(mode));
    }
    out.push_back(Term{term.amplitude, FockBasisState(std::move(pairs))});
  }
  return make_pure_over(std::move(modes), std::move(out));
}

PureState restricted_to(const PureState& state,
                        std::span<const ModeId> keep) {
  std::vector<ModeId> kept;
  for (ModeId mode : state.modes()) {
    if (std::find(keep.begin(), keep.end(), mode) != keep.end()) {
      kept.push_back(mode);
    }
  }
  std::vector<Term> out;
  out.reserve(state.terms().size());
  for (const Term& term : state.terms()) {
    for (std::size_t k = 0; k < term.basis.modes().size(); ++k) {
      const ModeId mode = term.basis.modes()[k];
      if (term.basis.occupations()[k] != 0 &&
          std::find(kept.begin(), kept.end(), mode) == kept.end()) {
        throw DomainError("cannot drop occupied mode '" + to_string(mode) +
                          "'");
      }
    }
    std::vector<std::pair<ModeId, int>> pairs;
    pairs.reserve(kept.size());
    for (ModeId mode : kept) {
      pairs.emplace_back(mode, term.basis.occupation(mode));
    }
    out.push_back(Term{term.amplitude, FockBasisState(std::move(pairs))});
  }
  return make_pure_over(std::move(kept), std::move(out));
}

PureState relabeled(const PureState& state,
                    std::span<const std::pair<ModeId, ModeId>> renames) {
  auto renamed = [&](ModeId mode) {
    for (const auto& [from, to] : renames) {
      if (mode == from) return to;
    }
    return mode;
  };
  std::vector<ModeId> modes;
  modes.reserve(state.modes().size());
  for (ModeId mode : state.modes()) {
    const ModeId target = renamed(mode);
    if (!is_valid_mode(target)) {
      throw DomainError("invalid rename target '" + to_string(target) + "'");
    }
    if (std::find(modes.begin(), modes.end(), target) != modes.end()) {
      throw DomainError("rename collides on mode '" + to_string(target) +
                        "'");
    }
    modes.push_back(target);
  }
  std::vector<Term> out;
  out.reserve(state.terms().size());
  for (const Term& term : state.terms()) {
    std::vector<std::pair<ModeId, int>> pairs;
    pairs.reserve(term.basis.modes().size());
    for (std::size_t k = 0; k < term.basis.modes().size(); ++k) {
      pairs.emplace_back(renamed(term.basis.modes()[k]),
                         term.basis.occupations()[k]);
    }
    out.push_back(Term{term.amplitude, FockBasisState(std::move(pairs))});
  }
  std::sort(modes.begin(), modes.end());
  return make_pure_over(std::move(modes), std::move(out));
}

StateEnsemble dephased(const PureState& state) {
  std::vector<StateEnsemble::Branch> branches;
  branches.reserve(state.terms().size());
  for (const Term& term : state.terms()) {
    branches.push_back(
        {std::norm(term.amplitude),
         make_pure_over(state.modes(), {Term{1.0, term.basis}})});
  }
  return StateEnsemble(std::move(branches));
}

}  // namespace plasmonq
