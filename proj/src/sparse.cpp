#include "slowmode/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slowmode/errors.hpp"

namespace slowmode {

void SparseOperator::multiply(const double* x, double* y) const {
#pragma omp parallel for schedule(static)
  for (long i = 0; i < dim_; ++i) {
    double acc = 0;
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) acc += vals_[k] * x[col_[k]];
    y[i] = acc;
  }
}

Eigen::VectorXd SparseOperator::multiply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(dim_);
  multiply(x.data(), y.data());
  return y;
}

double SparseOperator::norm_est() const {
  double best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (long i = 0; i < dim_; ++i) {
    double row = 0;
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) row += std::abs(vals_[k]);
    best = std::max(best, row);
  }
  return best;
}

Eigen::MatrixXd SparseOperator::dense() const {
  if (dim_ > 20000) throw SizeError("dense() limited to dim <= 20000");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (long i = 0; i < dim_; ++i)
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) m(i, col_[k]) += vals_[k];
  return m;
}

void SparseOperator::Builder::add(long i, long j, double v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw Error("sparse index out of range");
  if (v == 0) return;
  rows_.push_back(i);
  cols_.push_back(j);
  vals_.push_back(v);
  if (i != j) {
    rows_.push_back(j);
    cols_.push_back(i);
    vals_.push_back(v);
  }
}

void SparseOperator::Builder::add_rank_one(const std::vector<long>& idx,
                                           const std::vector<double>& coef, double scale) {
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b)
      add(idx[a], idx[b], scale * coef[a] * coef[b]);
}

SparseOperator SparseOperator::Builder::assemble() const {
  SparseOperator op;
  op.dim_ = dim_;
  const std::size_t nnz = vals_.size();
  std::vector<std::int64_t> count(dim_ + 1, 0);
  for (std::size_t k = 0; k < nnz; ++k) count[rows_[k] + 1]++;
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<std::int64_t> pos(count.begin(), count.end() - 1);
  std::vector<std::int32_t> col(nnz);
  std::vector<double> val(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    const std::int64_t p = pos[rows_[k]]++;
    col[p] = static_cast<std::int32_t>(cols_[k]);
    val[p] = vals_[k];
  }
  // merge duplicates within each row
  op.row_ptr_.assign(dim_ + 1, 0);
  std::vector<std::int32_t> mcol;
  std::vector<double> mval;
  mcol.reserve(nnz);
  mval.reserve(nnz);
  for (long i = 0; i < dim_; ++i) {
    const std::int64_t lo = count[i], hi = count[i + 1];
    std::vector<std::pair<std::int32_t, double>> row;
    row.reserve(hi - lo);
    for (std::int64_t k = lo; k < hi; ++k) row.emplace_back(col[k], val[k]);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!mcol.empty() && static_cast<std::int64_t>(mcol.size()) > op.row_ptr_[i] &&
          mcol.back() == row[k].first) {
        mval.back() += row[k].second;
      } else {
        mcol.push_back(row[k].first);
        mval.push_back(row[k].second);
      }
    }
    op.row_ptr_[i + 1] = static_cast<std::int64_t>(mcol.size());
  }
  op.col_ = std::move(mcol);
  op.vals_ = std::move(mval);
  return op;
}

}  // namespace slowmode
