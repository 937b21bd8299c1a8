#include "slowmode/markov_oracle.hpp"

#include <cmath>
#include <sstream>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

// digit of config c at 0-based site j
inline int digit(long c, long pj, int m) { return static_cast<int>((c / pj) % m); }

}  // namespace

MarkovOracle::MarkovOracle(const GateSet& gs, long cap) : gs_(gs), m_(local_dim(gs.model)) {
  double states = std::pow(static_cast<double>(m_), gs.L);
  if (states > static_cast<double>(cap))
    throw SizeError("m^L = " + std::to_string(states) + " exceeds oracle cap " +
                    std::to_string(cap));
  n_ = static_cast<long>(std::llround(states));
  pow_.resize(gs.L + 1);
  pow_[0] = 1;
  for (int j = 1; j <= gs.L; ++j) pow_[j] = pow_[j - 1] * m_;
}

void MarkovOracle::apply_layer(const std::vector<GateRule>& rules, Eigen::VectorXd& v) const {
  for (const auto& rule : rules) {
    switch (rule.kind) {
      case GateRule::Kind::PairFlip: {
        const double p = rule.flip_probability;
        for (const auto& [a, b] : rule.pairs) {
          long delta = 0;
          for (std::size_t i = 0; i < rule.support.size(); ++i)
            delta += (static_cast<long>(b[i]) - a[i]) * pow_[rule.support[i]];
          for (long c = 0; c < n_; ++c) {
            bool is_a = true;
            for (std::size_t i = 0; i < rule.support.size() && is_a; ++i)
              is_a = digit(c, pow_[rule.support[i]], m_) == a[i];
            if (!is_a) continue;
            const long c2 = c + delta;
            const double va = v[c], vb = v[c2];
            v[c] = (1 - p) * va + p * vb;
            v[c2] = (1 - p) * vb + p * va;
          }
        }
        break;
      }
      case GateRule::Kind::Shift: {
        // edge (c, c+delta) taken with probability 1/2 in each direction
        long delta = 0;
        for (std::size_t i = 0; i < rule.support.size(); ++i)
          delta += static_cast<long>(rule.shift[i]) * pow_[rule.support[i]];
        Eigen::VectorXd old = v;
        for (long c = 0; c < n_; ++c) {
          bool ok = true;
          for (std::size_t i = 0; i < rule.support.size() && ok; ++i) {
            const int d = digit(c, pow_[rule.support[i]], m_) + rule.shift[i];
            ok = d >= 0 && d < m_;
          }
          if (!ok) continue;
          const long c2 = c + delta;
          v[c] += 0.5 * (old[c2] - old[c]);
          v[c2] += 0.5 * (old[c] - old[c2]);
        }
        break;
      }
      case GateRule::Kind::Resample: {
        const long pj = pow_[rule.support[0]];
        for (long c = 0; c < n_; ++c) {
          if (digit(c, pj, m_) != 0) continue;
          double acc = 0;
          for (int s = 0; s < m_; ++s) acc += v[c + s * pj];
          acc /= m_;
          for (int s = 0; s < m_; ++s) v[c + s * pj] = acc;
        }
        break;
      }
    }
  }
}

Eigen::VectorXd MarkovOracle::apply_step(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
  const int n_bulk = static_cast<int>(gs_.bulk_layers.size());
  for (int l = 0; l < gs_.move_count(); ++l) {
    Eigen::VectorXd w = v;
    apply_layer(l < n_bulk ? gs_.bulk_layers[l] : gs_.impurity_rules, w);
    out += gs_.layer_weights[l] * w;
  }
  return out;
}

Eigen::VectorXd MarkovOracle::charge_observable(int site0) const {
  Eigen::VectorXd f(n_);
  const long pj = pow_[site0];
  for (long c = 0; c < n_; ++c) f[c] = state_charge(gs_.model, digit(c, pj, m_));
  return f;
}

std::vector<CorrelationSeries> MarkovOracle::autocorrelation(const std::vector<int>& probe_sites,
                                                             int t_max) const {
  std::vector<CorrelationSeries> out;
  for (int site : probe_sites) {
    if (site < 1 || site > gs_.L) throw ValidationError("probe site out of [1,L]");
    const Eigen::VectorXd f = charge_observable(site - 1);
    Eigen::VectorXd g = f;
    CorrelationSeries s;
    s.site = site;
    std::ostringstream meta;
    meta << "{\"model\":\"" << model_name(gs_.model) << "\",\"L\":" << gs_.L
         << ",\"impurity\":\"" << gs_.impurity.to_string() << "\",\"oracle\":true}";
    s.meta_json = meta.str();
    for (int t = 0; t <= t_max; ++t) {
      if (t > 0) g = apply_step(g);
      s.times.push_back(t);
      s.values.push_back(f.dot(g) / static_cast<double>(n_));
      s.std_errors.push_back(0.0);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Eigen::MatrixXd MarkovOracle::cross_correlation(int j0, int t_max) const {
  if (j0 < 1 || j0 > gs_.L) throw ValidationError("probe site out of [1,L]");
  Eigen::VectorXd g = charge_observable(j0 - 1);
  std::vector<Eigen::VectorXd> probes;
  for (int j = 0; j < gs_.L; ++j) probes.push_back(charge_observable(j));
  Eigen::MatrixXd out(gs_.L, t_max + 1);
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) g = apply_step(g);
    for (int j = 0; j < gs_.L; ++j) out(j, t) = probes[j].dot(g) / static_cast<double>(n_);
  }
  return out;
}

CorrelationSeries MarkovOracle::magnetization(const SpinConfiguration& initial, int t_max) const {
  if (initial.size() != gs_.L) throw ValidationError("initial configuration length != L");
  long c0 = 0;
  for (int j = 0; j < gs_.L; ++j) c0 += static_cast<long>(initial.states[j]) * pow_[j];
  Eigen::VectorXd rho = Eigen::VectorXd::Zero(n_);
  rho[c0] = 1.0;
  Eigen::VectorXd mz(n_);
  for (long c = 0; c < n_; ++c) {
    long q = 0;
    for (int j = 0; j < gs_.L; ++j) q += state_charge(gs_.model, digit(c, pow_[j], m_));
    mz[c] = static_cast<double>(q);
  }
  CorrelationSeries s;
  s.site = 0;
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) rho = apply_step(rho);
    s.times.push_back(t);
    s.values.push_back(mz.dot(rho));
    s.std_errors.push_back(0.0);
  }
  return s;
}

Eigen::MatrixXd MarkovOracle::one_step_matrix() const {
  if (n_ > 4096) throw SizeError("one_step_matrix limited to 4096 states");
  Eigen::MatrixXd T(n_, n_);
  for (long c = 0; c < n_; ++c) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n_);
    e[c] = 1.0;
    T.col(c) = apply_step(e);
  }
  return T;
}

}  // namespace slowmode
