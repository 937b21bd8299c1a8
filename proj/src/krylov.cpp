#include "slowmode/krylov.hpp"

#include <cmath>
#include <numeric>

#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

struct UnionFind {
  std::vector<long> parent;
  explicit UnionFind(long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  long find(long x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(long a, long b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

}  // namespace

KrylovReport enumerate_krylov(const GateSet& gs, long cap) {
  const int m = local_dim(gs.model);
  const double states = std::pow(static_cast<double>(m), gs.L);
  if (states > static_cast<double>(cap))
    throw SizeError("m^L exceeds enumeration cap");
  const long n = static_cast<long>(std::llround(states));
  std::vector<long> pw(gs.L + 1);
  pw[0] = 1;
  for (int j = 1; j <= gs.L; ++j) pw[j] = pw[j - 1] * m;

  UnionFind uf(n);
  auto visit_rule = [&](const GateRule& rule) {
    switch (rule.kind) {
      case GateRule::Kind::PairFlip:
        for (const auto& [a, b] : rule.pairs) {
          long delta = 0;
          for (std::size_t i = 0; i < rule.support.size(); ++i)
            delta += (static_cast<long>(b[i]) - a[i]) * pw[rule.support[i]];
          for (long c = 0; c < n; ++c) {
            bool is_a = true;
            for (std::size_t i = 0; i < rule.support.size() && is_a; ++i)
              is_a = static_cast<int>((c / pw[rule.support[i]]) % m) == a[i];
            if (is_a) uf.unite(c, c + delta);
          }
        }
        break;
      case GateRule::Kind::Shift: {
        long delta = 0;
        for (std::size_t i = 0; i < rule.support.size(); ++i)
          delta += static_cast<long>(rule.shift[i]) * pw[rule.support[i]];
        for (long c = 0; c < n; ++c) {
          bool ok = true;
          for (std::size_t i = 0; i < rule.support.size() && ok; ++i) {
            const int d = static_cast<int>((c / pw[rule.support[i]]) % m) + rule.shift[i];
            ok = d >= 0 && d < m;
          }
          if (ok) uf.unite(c, c + delta);
        }
        break;
      }
      case GateRule::Kind::Resample: {
        const long pj = pw[rule.support[0]];
        for (long c = 0; c < n; ++c)
          if (static_cast<int>((c / pj) % m) == 0)
            for (int s = 1; s < m; ++s) uf.unite(c, c + s * pj);
        break;
      }
    }
  };

  for (const auto& layer : gs.bulk_layers)
    for (const auto& rule : layer) visit_rule(rule);
  for (const auto& rule : gs.impurity_rules) visit_rule(rule);

  std::map<long, long> comp_size;
  for (long c = 0; c < n; ++c) comp_size[uf.find(c)]++;
  KrylovReport rep;
  rep.subspace_count = static_cast<long>(comp_size.size());
  for (const auto& [root, size] : comp_size) rep.size_histogram[size]++;
  return rep;
}

}  // namespace slowmode
