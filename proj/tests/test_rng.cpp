#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "slowmode/rng.hpp"

using namespace slowmode;

TEST_CASE("streams are reproducible and independent of construction order") {
  CounterRng a(123, 7);
  CounterRng b(123, 8);
  CounterRng a2(123, 7);
  std::vector<std::uint64_t> va, vb, va2;
  for (int i = 0; i < 100; ++i) {
    va.push_back(a.next_u64());
    vb.push_back(b.next_u64());
  }
  for (int i = 0; i < 100; ++i) va2.push_back(a2.next_u64());
  CHECK(va == va2);
  CHECK(va != vb);
}

TEST_CASE("doubles are uniform in [0,1)") {
  CounterRng r(999, 0);
  double sum = 0, sumsq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = r.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sumsq += u * u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.005);
  CHECK(std::abs(sumsq / n - 1.0 / 3.0) < 0.005);
}

TEST_CASE("next_below covers all residues evenly") {
  CounterRng r(5, 3);
  int counts[3] = {0, 0, 0};
  const int n = 90000;
  for (int i = 0; i < n; ++i) counts[r.next_below(3)]++;
  for (int c : counts) CHECK(std::abs(c - n / 3) < 600);
}

TEST_CASE("different master seeds decorrelate the same stream index") {
  CounterRng a(1, 42), b(2, 42);
  int agree = 0;
  for (int i = 0; i < 1000; ++i) agree += a.next_bit() == b.next_bit();
  CHECK(agree > 400);
  CHECK(agree < 600);
}
