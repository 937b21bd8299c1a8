#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slowmode/errors.hpp"
#include "slowmode/krylov.hpp"

using namespace slowmode;

TEST_CASE("tjz counts 2^{L+1}-1 pattern sectors") {
  for (int L = 2; L <= 8; ++L) {
    const auto rep = enumerate_krylov(build_gate_set(Model::TJz, L));
    CHECK(rep.subspace_count == (1L << (L + 1)) - 1);
  }
}

TEST_CASE("u1 counts the magnetization sectors") {
  for (int L = 2; L <= 9; ++L)
    CHECK(enumerate_krylov(build_gate_set(Model::U1Half, L)).subspace_count == L + 1);
}

TEST_CASE("two-site state-flip impurity makes H3 ergodic") {
  const auto rep =
      enumerate_krylov(build_gate_set(Model::DipOneH3, 6, ImpuritySpec::state_flip({5, 6})));
  CHECK(rep.subspace_count == 1);
  CHECK(rep.size_histogram.begin()->first == 729);
}

TEST_CASE("impurities never increase the subspace count") {
  struct Case {
    Model m;
    int L;
    ImpuritySpec imp;
  };
  for (const auto& cs : {Case{Model::TJz, 6, ImpuritySpec::state_flip({6})},
                         Case{Model::DipOneH3, 7, ImpuritySpec::state_flip({7})},
                         Case{Model::U1Half, 8, ImpuritySpec::site_flip(1)},
                         Case{Model::DipHalfW4W5, 8, ImpuritySpec::swap_at(1)},
                         Case{Model::DipHalfW4W5, 8, ImpuritySpec::full_breaking({1, 2, 3})}}) {
    const long k0 = enumerate_krylov(build_gate_set(cs.m, cs.L)).subspace_count;
    const long k1 = enumerate_krylov(build_gate_set(cs.m, cs.L, cs.imp)).subspace_count;
    CHECK(k1 <= k0);
  }
}

TEST_CASE("histogram accounts for every configuration") {
  const auto rep = enumerate_krylov(build_gate_set(Model::DipOneH3H4, 7));
  long total = 0;
  for (const auto& [size, count] : rep.size_histogram) total += size * count;
  CHECK(total == 2187);
}

TEST_CASE("cap") {
  CHECK_THROWS_AS(enumerate_krylov(build_gate_set(Model::TJz, 13), 531441), SizeError);
}
