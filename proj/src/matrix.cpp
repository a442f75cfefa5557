#include "qhom/matrix.hpp"

#include <cassert>

namespace qhom {

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

bool Mat::is_zero() const {
  for (const auto& s : e_)
    if (s.num != 0) return false;
  return true;
}

Mat mul(const Mat& a, const Mat& b) {
  assert(a.cols() == b.rows());
  const Field& F = a.field();
  Mat c(F, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (F.is_zero(aik)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b.at(k, j);
        if (F.is_zero(bkj)) continue;
        c.at(i, j) = F.add(c.at(i, j), F.mul(aik, bkj));
      }
    }
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  const Field& F = a.field();
  Mat c(F, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return c;
}

Mat sub(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  const Field& F = a.field();
  Mat c(F, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = F.sub(a.at(i, j), b.at(i, j));
  return c;
}

Mat scale(const Mat& a, const Scalar& c) {
  const Field& F = a.field();
  Mat r(F, a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = F.mul(a.at(i, j), c);
  return r;
}

Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
  return t;
}

Mat hstack(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows());
  Mat c(a.field(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
  }
  return c;
}

Mat vstack(const Mat& a, const Mat& b) {
  assert(a.cols() == b.cols());
  Mat c(a.field(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) c.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return c;
}

std::vector<int> rref_in_place(Mat& a) {
  const Field& F = a.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!F.is_zero(a.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    Scalar s = F.inv(a.at(r, c));
    for (int j = c; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), s);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || F.is_zero(a.at(i, c))) continue;
      Scalar f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j)
        a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(Mat a) { return static_cast<int>(rref_in_place(a).size()); }

Mat kernel_basis(const Mat& a) {
  const Field& F = a.field();
  Mat m = a;
  std::vector<int> piv = rref_in_place(m);
  std::vector<bool> is_piv(a.cols(), false);
  for (int c : piv) is_piv[c] = true;
  int k = a.cols() - static_cast<int>(piv.size());
  Mat ker(F, a.cols(), k);
  int col = 0;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_piv[c]) continue;
    ker.at(c, col) = F.one();
    for (size_t i = 0; i < piv.size(); ++i)
      ker.at(piv[i], col) = F.neg(m.at(static_cast<int>(i), c));
    ++col;
  }
  return ker;
}

Mat column_space_basis(const Mat& a) {
  Mat t = transpose(a);
  std::vector<int> piv = rref_in_place(t);
  Mat basis(a.field(), a.rows(), static_cast<int>(piv.size()));
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < a.rows(); ++j)
      basis.at(j, static_cast<int>(i)) = t.at(static_cast<int>(i), j);
  return basis;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  assert(a.rows() == b.rows());
  const Field& F = a.field();
  Mat aug = hstack(a, b);
  std::vector<int> piv = rref_in_place(aug);
  for (int c : piv)
    if (c >= a.cols()) return std::nullopt;
  Mat x(F, a.cols(), b.cols());
  for (size_t i = 0; i < piv.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(piv[i], j) = aug.at(static_cast<int>(i), a.cols() + j);
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  assert(a.rows() == a.cols());
  Mat aug = hstack(a, Mat::identity(a.field(), a.rows()));
  std::vector<int> piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) != a.rows()) return std::nullopt;
  Mat inv(a.field(), a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) inv.at(i, j) = aug.at(i, a.cols() + j);
  return inv;
}

}  // namespace qhom
