#ifndef QHOM_MATRIX_HPP
#define QHOM_MATRIX_HPP

#include <optional>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

// Dense matrix over an exact field.  Columns are the domain: a shape r x c
// matrix represents a linear map k^c -> k^r acting on column vectors.
class Mat {
public:
  Mat() : nr_(0), nc_(0) {}
  Mat(const Field& f, int rows, int cols)
      : F_(f), nr_(rows), nc_(cols), e_(static_cast<size_t>(rows) * cols, f.zero()) {}

  static Mat identity(const Field& f, int n);

  int rows() const { return nr_; }
  int cols() const { return nc_; }
  const Field& field() const { return F_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * nc_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * nc_ + j]; }

  bool is_zero() const;
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.nr_ == b.nr_ && a.nc_ == b.nc_ && a.e_ == b.e_;
  }

private:
  Field F_;
  int nr_, nc_;
  std::vector<Scalar> e_;
};

Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat scale(const Mat& a, const Scalar& c);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);

// Gauss-Jordan to reduced row echelon form; returns pivot column indices.
// Deterministic: first nonzero entry scanning top-down in each column.
std::vector<int> rref_in_place(Mat& a);
int rank(Mat a);

// Columns form a basis of { x : a x = 0 }.
Mat kernel_basis(const Mat& a);

// Canonical basis of the column space: the nonzero rows of rref(a^T),
// transposed back to columns.  Two matrices with the same column space
// produce identical output.
Mat column_space_basis(const Mat& a);

// Solve a x = b for every column of b; nullopt when inconsistent.
// Free variables are set to zero, so the solution is deterministic.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Inverse of a square invertible matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

}  // namespace qhom

#endif
