#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace slowmode {

enum class Model { U1Half, DipHalfW4W5, DipOneH3, DipOneH3H4, TJz };

std::string model_name(Model m);
Model model_from_name(const std::string& name);

/// Local Hilbert space dimension (2 or 3).
int local_dim(Model m);
/// Smallest system size that fits one bulk gate.
int min_span(Model m);

/// Charge carried by a local state.
/// spin-1/2 {0,1} -> Z in {-1,+1}; spin-1 {0,1,2} -> S^z in {-1,0,+1};
/// t-Jz {empty, up, down} = {0,1,2} -> S^z in {0,+1,-1}.
int state_charge(Model m, int state);
bool conserves_dipole(Model m);

/// One classical lattice configuration.
struct SpinConfiguration {
  std::vector<std::uint8_t> states;
  int size() const { return static_cast<int>(states.size()); }
};

SpinConfiguration all_state_configuration(int L, std::uint8_t state);

/// One local stochastic gate.
///
/// PairFlip: if the support matches one side of a transition pair, the pair is
/// swapped with probability flip_probability. Pairs are disjoint as unordered
/// 2-sets, so the one-step matrix of the gate is symmetric.
///
/// Shift: adds +shift or -shift (fair draw) to the support when the result
/// stays in range. Transition chains share configurations, and the +/- draw
/// keeps the one-step matrix symmetric (each configuration proposes at most
/// one neighbor per direction).
///
/// Resample: replaces the site state by a uniform draw over all m states.
struct GateRule {
  enum class Kind { PairFlip, Shift, Resample };
  Kind kind = Kind::PairFlip;
  std::vector<int> support;  // 0-based sites, ascending
  std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> pairs;
  double flip_probability = 0.5;
  std::vector<std::int8_t> shift;

  void validate(int L, int m) const;
};

struct ImpuritySpec {
  enum class Kind { None, SiteFlip, ChargePreservingSwap, FullBreakingFlips, StateFlip };
  Kind kind = Kind::None;
  std::vector<int> sites;  // 1-based

  static ImpuritySpec none() { return {}; }
  static ImpuritySpec site_flip(int site) { return {Kind::SiteFlip, {site}}; }
  static ImpuritySpec swap_at(int site) { return {Kind::ChargePreservingSwap, {site}}; }
  static ImpuritySpec full_breaking(std::vector<int> sites) {
    return {Kind::FullBreakingFlips, std::move(sites)};
  }
  static ImpuritySpec state_flip(std::vector<int> sites) {
    return {Kind::StateFlip, std::move(sites)};
  }
  std::string to_string() const;
};

/// Full stochastic update rule of a model. A time step draws one bulk layer
/// or the impurity move, all with equal probability.
struct GateSet {
  Model model;
  int L = 0;
  std::vector<std::vector<GateRule>> bulk_layers;  // non-overlapping rules each
  std::vector<GateRule> impurity_rules;            // applied together as one move
  std::vector<double> layer_weights;               // bulk layers..., then impurity move
  ImpuritySpec impurity;

  bool has_impurity() const { return !impurity_rules.empty(); }
  int move_count() const {
    return static_cast<int>(bulk_layers.size()) + (has_impurity() ? 1 : 0);
  }
};

GateSet build_gate_set(Model model, int L, const ImpuritySpec& impurity = {});

}  // namespace slowmode
