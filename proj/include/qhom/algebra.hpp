#ifndef QHOM_ALGEBRA_HPP
#define QHOM_ALGEBRA_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qhom/matrix.hpp"
#include "qhom/quiver.hpp"

namespace qhom {

struct NotAdmissible : std::runtime_error {
  explicit NotAdmissible(int max_length)
      : std::runtime_error("relations do not define an admissible ideal: rad^n "
                           "did not vanish for any n <= " +
                           std::to_string(max_length)),
        max_length(max_length) {}
  int max_length;
};

struct NonParallelRelation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RelationDegreeTooLow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relations must be homogeneous in path length; the degreewise elimination
// that computes the basis is only valid for graded ideals.
struct NonHomogeneousRelation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BuildBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse vector over algebra basis indices, sorted by index.
using SparseVec = std::vector<std::pair<int, Scalar>>;

struct BasisElement {
  PathWord path;
  int src;
  int tgt;
  int len;
};

// A finite-dimensional bound quiver algebra kQ/I over an exact field.
// The basis is the set of paths surviving degreewise elimination of the
// relation ideal, in length-lex order (arrows ordered by declaration).
// Products compose left to right: mult(p, q) is "traverse p, then q".
class Algebra {
public:
  const Quiver& quiver() const { return q_; }
  const Field& field() const { return f_; }
  const std::vector<Relation>& relations() const { return rels_; }

  int dimension() const { return static_cast<int>(basis_.size()); }
  int nilpotency_index() const { return nilpotency_; }
  int loewy_length() const { return nilpotency_; }
  int max_length() const { return max_length_; }

  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& basis_element(int i) const { return basis_[i]; }
  int trivial_path_index(int vertex) const { return vertex; }
  int arrow_basis_index(int arrow) const { return q_.n_vertices() + arrow; }

  // Indices of basis paths with the given source vertex, in basis order.
  const std::vector<int>& basis_with_source(int v) const { return by_src_[v]; }

  // Normal form of the product basis[i] * basis[j]; empty when the product
  // is zero or the paths do not compose.
  SparseVec mult(int i, int j) const;
  SparseVec mult_by_arrow(int i, int arrow) const;

  // Normal form of an arbitrary path word (must be composable).
  SparseVec normal_form(const PathWord& w) const;

  // For a basis path of length >= 1: the basis index of its length-minus-one
  // prefix and the final arrow.  Prefixes of basis paths are basis paths
  // because elimination pivots are lex-greatest.
  std::pair<int, int> parent_of(int i) const;

  // Evaluates a relation in the algebra; used by consistency checks.
  SparseVec evaluate(const Relation& r) const;

  // The opposite algebra (arrows and relation words reversed), built lazily
  // and cached.  Dimension and nilpotency index are preserved.
  std::shared_ptr<const Algebra> opposite() const;

private:
  friend std::shared_ptr<const Algebra> build_algebra(const Quiver&,
                                                      const std::vector<Relation>&,
                                                      const Field&, int);
  Quiver q_;
  Field f_;
  std::vector<Relation> rels_;
  int nilpotency_ = 1;
  int max_length_ = 2;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<int>> by_src_;
  std::map<std::vector<int>, SparseVec> path_nf_;  // nontrivial paths of length < N

  mutable std::once_flag op_once_;
  mutable std::shared_ptr<const Algebra> op_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Builds the algebra, detecting the nilpotency index N (least n with
// rad^n = 0).  Throws NotAdmissible when no such n <= max_length exists.
AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                         const Field& f, int max_length);

int loewy_length(const Algebra& a);
AlgebraPtr opposite_algebra(const Algebra& a);

}  // namespace qhom

#endif
