#include "slowmode/gateset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "slowmode/errors.hpp"

namespace slowmode {

std::string model_name(Model m) {
  switch (m) {
    case Model::U1Half: return "u1_half";
    case Model::DipHalfW4W5: return "dip_half_w4w5";
    case Model::DipOneH3: return "dip_one_h3";
    case Model::DipOneH3H4: return "dip_one_h3h4";
    case Model::TJz: return "tjz";
  }
  return "?";
}

Model model_from_name(const std::string& name) {
  if (name == "u1_half") return Model::U1Half;
  if (name == "dip_half_w4w5") return Model::DipHalfW4W5;
  if (name == "dip_one_h3") return Model::DipOneH3;
  if (name == "dip_one_h3h4") return Model::DipOneH3H4;
  if (name == "tjz") return Model::TJz;
  throw ValidationError("unknown model: " + name);
}

int local_dim(Model m) {
  switch (m) {
    case Model::U1Half:
    case Model::DipHalfW4W5: return 2;
    default: return 3;
  }
}

int min_span(Model m) {
  switch (m) {
    case Model::U1Half:
    case Model::TJz: return 2;
    case Model::DipHalfW4W5: return 5;  // W5 is the widest gate
    case Model::DipOneH3: return 3;
    case Model::DipOneH3H4: return 4;
  }
  return 2;
}

int state_charge(Model m, int state) {
  switch (m) {
    case Model::U1Half:
    case Model::DipHalfW4W5: return 2 * state - 1;
    case Model::DipOneH3:
    case Model::DipOneH3H4: return state - 1;
    case Model::TJz: return state == 0 ? 0 : (state == 1 ? 1 : -1);
  }
  return 0;
}

bool conserves_dipole(Model m) {
  return m == Model::DipHalfW4W5 || m == Model::DipOneH3 || m == Model::DipOneH3H4;
}

SpinConfiguration all_state_configuration(int L, std::uint8_t state) {
  return SpinConfiguration{std::vector<std::uint8_t>(static_cast<std::size_t>(L), state)};
}

std::string ImpuritySpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::None: return "none";
    case Kind::SiteFlip: os << "site_flip"; break;
    case Kind::ChargePreservingSwap: os << "charge_preserving_swap"; break;
    case Kind::FullBreakingFlips: os << "full_breaking_flips"; break;
    case Kind::StateFlip: os << "state_flip"; break;
  }
  os << "@";
  for (std::size_t i = 0; i < sites.size(); ++i) os << (i ? "," : "") << sites[i];
  return os.str();
}

void GateRule::validate(int L, int m) const {
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 0 || support[i] >= L) throw ValidationError("gate support out of range");
    if (i > 0 && support[i] <= support[i - 1])
      throw ValidationError("gate support must be ascending");
  }
  if (kind == Kind::PairFlip) {
    std::set<std::vector<std::uint8_t>> seen;
    for (const auto& [a, b] : pairs) {
      if (a.size() != support.size() || b.size() != support.size())
        throw ValidationError("pair length mismatch");
      if (a == b) throw ValidationError("degenerate transition pair");
      for (auto s : a)
        if (s >= m) throw ValidationError("pair state out of range");
      for (auto s : b)
        if (s >= m) throw ValidationError("pair state out of range");
      // disjointness as unordered 2-sets: no configuration in two pairs
      if (!seen.insert(a).second || !seen.insert(b).second)
        throw ValidationError("transition pairs are not disjoint");
    }
  }
  if (kind == Kind::Shift && shift.size() != support.size())
    throw ValidationError("shift length mismatch");
}

namespace {

GateRule pair_gate(std::vector<int> support,
                   std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>> pairs) {
  GateRule r;
  r.kind = GateRule::Kind::PairFlip;
  r.support = std::move(support);
  r.pairs = std::move(pairs);
  return r;
}

GateRule shift_gate(std::vector<int> support, std::vector<std::int8_t> shift) {
  GateRule r;
  r.kind = GateRule::Kind::Shift;
  r.support = std::move(support);
  r.shift = std::move(shift);
  return r;
}

GateRule resample_gate(int site) {
  GateRule r;
  r.kind = GateRule::Kind::Resample;
  r.support = {site};
  return r;
}

// Fully packed layers of one gate family: stride = span, offsets 0..span-1,
// empty layers dropped.
template <typename MakeGate>
void add_layers(GateSet& gs, int span, MakeGate make) {
  for (int offset = 0; offset < span; ++offset) {
    std::vector<GateRule> layer;
    for (int i = offset; i + span <= gs.L; i += span) layer.push_back(make(i));
    if (!layer.empty()) gs.bulk_layers.push_back(std::move(layer));
  }
}

void check_bulk_conservation(const GateSet& gs) {
  for (const auto& layer : gs.bulk_layers) {
    for (const auto& rule : layer) {
      if (rule.kind == GateRule::Kind::PairFlip) {
        for (const auto& [a, b] : rule.pairs) {
          long qa = 0, qb = 0, pa = 0, pb = 0;
          for (std::size_t i = 0; i < a.size(); ++i) {
            int site = rule.support[i];
            qa += state_charge(gs.model, a[i]);
            qb += state_charge(gs.model, b[i]);
            pa += static_cast<long>(site + 1) * state_charge(gs.model, a[i]);
            pb += static_cast<long>(site + 1) * state_charge(gs.model, b[i]);
          }
          if (qa != qb) throw ValidationError("bulk pair breaks charge conservation");
          if (conserves_dipole(gs.model) && pa != pb)
            throw ValidationError("bulk pair breaks dipole conservation");
        }
      } else if (rule.kind == GateRule::Kind::Shift) {
        long q = 0, p = 0;
        for (std::size_t i = 0; i < rule.shift.size(); ++i) {
          q += rule.shift[i];
          p += static_cast<long>(rule.support[i] + 1) * rule.shift[i];
        }
        if (q != 0) throw ValidationError("bulk shift breaks charge conservation");
        if (conserves_dipole(gs.model) && p != 0)
          throw ValidationError("bulk shift breaks dipole conservation");
      }
    }
  }
}

}  // namespace

GateSet build_gate_set(Model model, int L, const ImpuritySpec& impurity) {
  if (L < min_span(model))
    throw SpanError("L=" + std::to_string(L) + " below minimal gate span of " + model_name(model));
  GateSet gs;
  gs.model = model;
  gs.L = L;
  gs.impurity = impurity;

  using Pair = std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>;
  switch (model) {
    case Model::U1Half:
      add_layers(gs, 2, [](int i) {
        return pair_gate({i, i + 1}, {Pair{{0, 1}, {1, 0}}});
      });
      break;
    case Model::DipHalfW4W5:
      add_layers(gs, 4, [](int i) {  // up down down up <-> down up up down
        return pair_gate({i, i + 1, i + 2, i + 3}, {Pair{{1, 0, 0, 1}, {0, 1, 1, 0}}});
      });
      add_layers(gs, 5, [](int i) {  // middle site untouched
        return pair_gate({i, i + 1, i + 2, i + 3, i + 4},
                         {Pair{{1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}},
                          Pair{{1, 0, 1, 0, 1}, {0, 1, 1, 1, 0}}});
      });
      break;
    case Model::DipOneH3:
    case Model::DipOneH3H4:
      // states 0,1,2 = -,0,+ ; transitions 0+0<->+-+, 0+-<->+-0, 0-0<->-+-, 0-+<->-+0
      add_layers(gs, 3, [](int i) {
        return pair_gate({i, i + 1, i + 2},
                         {Pair{{1, 2, 1}, {2, 0, 2}}, Pair{{1, 2, 0}, {2, 0, 1}},
                          Pair{{1, 0, 1}, {0, 2, 0}}, Pair{{1, 0, 2}, {0, 2, 1}}});
      });
      if (model == Model::DipOneH3H4) {
        add_layers(gs, 4, [](int i) {
          return shift_gate({i, i + 1, i + 2, i + 3}, {+1, -1, -1, +1});
        });
      }
      break;
    case Model::TJz:
      add_layers(gs, 2, [](int i) {
        return pair_gate({i, i + 1}, {Pair{{1, 0}, {0, 1}}, Pair{{2, 0}, {0, 2}}});
      });
      break;
  }

  const int m = local_dim(model);
  for (int s : impurity.sites)
    if (s < 1 || s > L) throw ValidationError("impurity site out of [1,L]");
  switch (impurity.kind) {
    case ImpuritySpec::Kind::None:
      break;
    case ImpuritySpec::Kind::SiteFlip:
      if (m != 2) throw UnsupportedImpurity("site flip requires a two-state model");
      if (impurity.sites.size() != 1) throw ValidationError("site flip takes one site");
      gs.impurity_rules.push_back(
          pair_gate({impurity.sites[0] - 1}, {Pair{{0}, {1}}}));
      break;
    case ImpuritySpec::Kind::ChargePreservingSwap: {
      if (!conserves_dipole(model))
        throw UnsupportedImpurity("charge-preserving swap is a dipole-model impurity");
      if (impurity.sites.size() != 1) throw ValidationError("swap takes the left site of the bond");
      int s = impurity.sites[0] - 1;
      if (s + 1 >= L) throw ValidationError("swap bond out of range");
      if (m == 2)
        gs.impurity_rules.push_back(pair_gate({s, s + 1}, {Pair{{1, 0}, {0, 1}}}));
      else  // spin-1: single charge hop across the bond
        gs.impurity_rules.push_back(shift_gate({s, s + 1}, {+1, -1}));
      break;
    }
    case ImpuritySpec::Kind::FullBreakingFlips:
      if (m != 2) throw UnsupportedImpurity("multi-site flips require a two-state model");
      if (impurity.sites.empty()) throw ValidationError("no impurity sites given");
      for (int s : impurity.sites)
        gs.impurity_rules.push_back(pair_gate({s - 1}, {Pair{{0}, {1}}}));
      break;
    case ImpuritySpec::Kind::StateFlip:
      if (m != 3) throw UnsupportedImpurity("state flip requires a three-state model");
      if (impurity.sites.empty()) throw ValidationError("no impurity sites given");
      for (int s : impurity.sites) gs.impurity_rules.push_back(resample_gate(s - 1));
      break;
  }

  // every move (bulk layer or impurity) drawn with equal probability
  const int n_moves = gs.move_count();
  gs.layer_weights.assign(static_cast<std::size_t>(n_moves), 1.0 / n_moves);

  for (const auto& layer : gs.bulk_layers) {
    int prev_end = -1;
    for (const auto& rule : layer) {
      rule.validate(L, m);
      if (rule.support.front() <= prev_end)
        throw ValidationError("overlapping rules in one layer");
      prev_end = rule.support.back();
    }
  }
  for (const auto& rule : gs.impurity_rules) rule.validate(L, m);
  check_bulk_conservation(gs);
  return gs;
}

}  // namespace slowmode
