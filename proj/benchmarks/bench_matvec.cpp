// Sparse matvec throughput (the Lanczos kernel), serial vs OpenMP rows.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "slowmode/rng.hpp"
#include "slowmode/superham.hpp"

using namespace slowmode;

int main() {
  const int L = 10;  // 59049-dimensional composite space
  const auto op = build_super_hamiltonian(SuperModel::H3H4, L,
                                          SuperImpurity::state_flip({L - 1, L}), 1.0, 1L << 22);
  std::printf("operator dim %ld, nnz %zu\n", op.dim(), op.nonzeros());
  Eigen::VectorXd x(op.dim()), y(op.dim());
  CounterRng rng(3, 1);
  for (long i = 0; i < op.dim(); ++i) x[i] = rng.next_double() - 0.5;

  const int reps = 200;
  for (int threads : {1, omp_get_max_threads()}) {
    omp_set_num_threads(threads);
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) op.multiply(x.data(), y.data());
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d thread(s): %7.1f matvec/s (%.3g nnz/s)\n", threads, reps / dt,
                reps * static_cast<double>(op.nonzeros()) / dt);
  }
  return 0;
}
