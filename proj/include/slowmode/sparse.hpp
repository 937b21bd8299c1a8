#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace slowmode {

/// Real symmetric sparse matrix in CSR form (both triangles stored for fast
/// row-parallel multiply).
class SparseOperator {
 public:
  SparseOperator() = default;

  long dim() const { return dim_; }
  std::size_t nonzeros() const { return vals_.size(); }

  /// y = A x; OpenMP over rows, bitwise deterministic for any thread count.
  void multiply(const double* x, double* y) const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;

  double norm_est() const;  // Gershgorin row-sum bound
  Eigen::MatrixXd dense() const;

  /// Builder: accumulate symmetric entries, then assemble.
  class Builder {
   public:
    explicit Builder(long dim) : dim_(dim) {}
    void add(long i, long j, double v);           // adds (i,j) and, when i != j, (j,i)
    void add_rank_one(const std::vector<long>& idx, const std::vector<double>& coef,
                      double scale);              // scale * (sum c_i |i>)(sum c_j <j|)
    SparseOperator assemble() const;
    long dim() const { return dim_; }

   private:
    long dim_;
    std::vector<std::int64_t> rows_, cols_;
    std::vector<double> vals_;
  };

 private:
  long dim_ = 0;
  std::vector<std::int64_t> row_ptr_;
  std::vector<std::int32_t> col_;
  std::vector<double> vals_;
};

}  // namespace slowmode
