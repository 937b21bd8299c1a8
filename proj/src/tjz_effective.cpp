#include "slowmode/tjz_effective.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "slowmode/eigensolve.hpp"
#include "slowmode/errors.hpp"

namespace slowmode {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

BigInt big_pow(int base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

double big_ratio(const BigInt& num, const BigInt& den) {
  return static_cast<double>(boost::multiprecision::cpp_rational(num) /
                             boost::multiprecision::cpp_rational(den));
}

double log_binom(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

TridiagEigen eigh(const Tridiagonal& t) {
  EigenDecomposition ed = eigh_tridiagonal(t.diag, t.off);
  return {std::move(ed.energies), std::move(ed.orbitals)};
}

Tridiagonal build_effective_hk(int L, int k) {
  if (k < 1 || k > L) throw ValidationError("need 1 <= k <= L");
  const int n = L - k + 1;
  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(std::max(0, n - 1));
  t.diag[0] = 1.0 + 0.5 * k / L;  // mu_k^+
  for (int l = k + 1; l <= L; ++l) t.diag[l - k] = 1.0 - 0.5 * l / L;  // mu_l^-
  for (int l = k; l < L; ++l)
    t.off[l - k] = -std::sqrt(static_cast<double>(l + 1) * (L - l)) / (std::sqrt(2.0) * L);
  return t;
}

Tridiagonal build_parent_h0(int L) {
  if (L < 1) throw ValidationError("need L >= 1");
  Tridiagonal t;
  t.diag.resize(L + 1);
  t.off.resize(L);
  for (int l = 0; l <= L; ++l) t.diag[l] = 1.0 - 0.5 * l / L;
  for (int l = 0; l < L; ++l)
    t.off[l] = -std::sqrt(static_cast<double>(l + 1) * (L - l)) / (std::sqrt(2.0) * L);
  return t;
}

Eigen::VectorXd parent_h0_exact_spectrum(int L) {
  Eigen::VectorXd e(L + 1);
  for (int i = 0; i <= L; ++i) {
    const double mp = 0.5 * L - i;  // m' descending => energy ascending
    e[i] = 0.75 - 1.5 * mp / L;
  }
  return e;
}

Eigen::VectorXd qk_coefficients(int L, int k) {
  const int n = L - k + 1;
  Eigen::VectorXd c(n);
  // log-space against overflow, normalized afterwards
  double peak = -1e300;
  for (int l = k; l <= L; ++l)
    peak = std::max(peak, 0.5 * (l * std::log(2.0) + log_binom(L, l)));
  for (int l = k; l <= L; ++l)
    c[l - k] = std::exp(0.5 * (l * std::log(2.0) + log_binom(L, l)) - peak);
  c.normalize();
  return c;
}

double sliom_variational_energy_tjz(int L, int k, int j_s, double g) {
  if (k < 1 || k > L || j_s < 1 || j_s > L) throw ValidationError("bad k or j_s");
  if (k == 1) {
    // g (4 3^{L-j_s} - 1) / (3^L - 1)
    const BigInt num = 4 * big_pow(3, L - j_s) - 1;
    const BigInt den = big_pow(3, L) - 1;
    return g * big_ratio(num, den);
  }
  if (j_s != L)
    throw ValidationError("closed form for k > 1 requires the impurity at j_s = L");
  // (3g/2) (k/L) 2^k binom(L,k) / sum_{l>=k} 2^l binom(L,l)
  BigInt den = 0;
  for (int l = k; l <= L; ++l) den += big_pow(2, l) * big_binom(L, l);
  const BigInt num = 3 * k * big_pow(2, k) * big_binom(L, k);
  return g * big_ratio(num, den) / (2.0 * L);
}

double sliom_variational_energy_tjz_approx(int L, double alpha, double g) {
  if (!(alpha > 0 && alpha < 2.0 / 3.0)) throw ValidationError("need 0 < k/L < 2/3");
  const double k = alpha * L;
  const double f = std::log(3.0) - alpha * std::log(2.0) + alpha * std::log(alpha) +
                   (1 - alpha) * std::log(1 - alpha);
  return 3.0 * g / std::sqrt(8.0 * M_PI) * std::sqrt(k) * std::exp(-f * L) /
         std::sqrt(static_cast<double>(L) * (L - k));
}

double sliom_variational_energy_h3_left(int L, double g) {
  return 14.0 * g * big_ratio(1, big_pow(3, L) - 1);
}

double sliom_variational_energy_h3_blockade(int L, int j0, double g) {
  if (j0 < 1 || j0 + 1 > L) throw ValidationError("blockade pair out of range");
  const int exp = L - j0 - 1;
  if (exp < 1) throw ValidationError("blockade too close to the boundary");
  return 8.0 * g * big_ratio(1, big_pow(3, exp) - 1);
}

DecayBound sliom_decay_bound_tjz(int L, int k, int j_s, double g) {
  return {sliom_variational_energy_tjz(L, k, j_s, g)};
}

DecayBound sliom_decay_bound_h3_blockade(int L, int j0, double g) {
  return {sliom_variational_energy_h3_blockade(L, j0, g)};
}

double sz_overlap_scaled(int L, int j, int k, int l) {
  if (k > j || l - k > L - j) return 0.0;  // k-th of l particles cannot sit at j
  const double lg = 0.5 * l * std::log(2.0) + log_binom(j - 1, k - 1) + log_binom(L - j, l - k) -
                    0.5 * log_binom(L, l) - 0.5 * L * std::log(3.0);
  return std::exp(lg);
}

double mazur_bound_tjz(int L, int j) {
  double acc = 0;
  for (int k = 1; k <= j; ++k)
    for (int l = k; l <= L; ++l) {
      const double w = sz_overlap_scaled(L, j, k, l);
      acc += w * w;
    }
  return acc;
}

double mazur_bound_edge_exact(int L) { return 2.0 * (2.0 * L + 1.0) / (9.0 * L); }

double plateau_value_tjz(int L) { return 4.0 / (9.0 * (1.0 - std::pow(3.0, -L))); }

std::vector<CorrelationSeries> effective_correlation_tjz(int L, const std::vector<int>& sites,
                                                         const std::vector<double>& times,
                                                         double g) {
  std::vector<CorrelationSeries> out;
  // spectra of H_k are shared between probe sites
  std::vector<TridiagEigen> spectra(L + 1);
  int max_site = 0;
  for (int j : sites) {
    if (j < 1 || j > L) throw ValidationError("site out of [1,L]");
    max_site = std::max(max_site, j);
  }
  for (int k = 1; k <= max_site; ++k) spectra[k] = eigh(build_effective_hk(L, k));

  for (int j : sites) {
    CorrelationSeries s;
    s.site = j;
    s.times = times;
    s.values.assign(times.size(), 0.0);
    s.std_errors.assign(times.size(), 0.0);

    double weight_total = 0;
    for (int k = 1; k <= j; ++k) {
      const TridiagEigen& ek = spectra[k];
      const int n = static_cast<int>(ek.values.size());
      Eigen::VectorXd u(n);
      for (int l = k; l <= L; ++l) u[l - k] = sz_overlap_scaled(L, j, k, l);
      const Eigen::VectorXd ov = ek.vectors.transpose() * u;
      weight_total += u.squaredNorm();
      for (std::size_t it = 0; it < times.size(); ++it) {
        double acc = 0;
        for (int a = 0; a < n; ++a)
          acc += std::exp(-g * ek.values[a] * times[it]) * ov[a] * ov[a];
        s.values[it] += acc;
      }
    }
    // completeness across the H_k blocks must reproduce the Mazur bound
    const double mazur = mazur_bound_tjz(L, j);
    if (std::abs(weight_total - mazur) > 1e-10 * std::max(1.0, mazur))
      throw OverlapError("overlap weights do not reproduce the Mazur bound");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<double> naive_u1_splitting(int L, double g) {
  if (L < 2) throw ValidationError("need L >= 2");
  std::vector<double> e;
  for (int i = 0; i <= L; ++i) {
    const double mx = 0.5 * L - i;
    e.push_back(2.0 * g * (1.0 - 2.0 * mx / L));
  }
  return e;
}

}  // namespace slowmode
