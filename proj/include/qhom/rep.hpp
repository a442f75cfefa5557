#ifndef QHOM_REP_HPP
#define QHOM_REP_HPP

#include <memory>
#include <vector>

#include "qhom/algebra.hpp"

namespace qhom {

struct AlgebraMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownVertex : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RelationViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A right module over a bound quiver algebra, presented as a covariant
// representation of the quiver: the arrow a: u -> v acts M_u -> M_v, and a
// path a1...ak acts as act[ak] * ... * act[a1].
struct Rep {
  AlgebraPtr A;
  std::vector<int> dim;   // per vertex
  std::vector<Mat> act;   // per arrow, shape dim[tgt] x dim[src]

  int total() const;
  bool is_zero_rep() const;
};

struct Morphism {
  Rep src;
  Rep dst;
  std::vector<Mat> comp;  // per vertex, shape dst.dim[v] x src.dim[v]
};

Rep zero_rep(const AlgebraPtr& a);
Rep make_rep(const AlgebraPtr& a, std::vector<int> dim, std::vector<Mat> act);

enum class StandardKind { Simple, Projective, Injective };
Rep standard_module(const AlgebraPtr& a, StandardKind kind, int vertex);
Rep regular_module(const AlgebraPtr& a);

// Matrix of the action of a path word (shape dim[tgt] x dim[src]).
Mat path_action(const Rep& m, const PathWord& w);

// Throws RelationViolation when some algebra relation acts nonzero.
void validate_rep(const Rep& m);

Morphism identity_morphism(const Rep& m);
Morphism zero_morphism(const Rep& src, const Rep& dst);
Morphism compose(const Morphism& first, const Morphism& then);
Morphism add_morphisms(const Morphism& f, const Morphism& g);
Morphism scale_morphism(const Morphism& f, const Scalar& c);
bool is_valid_morphism(const Morphism& f);
bool morphism_is_zero(const Morphism& f);
bool morphism_is_iso(const Morphism& f);

// Basis of Hom(M, N) as solutions of the commuting-square equations.
std::vector<Morphism> hom_basis(const Rep& m, const Rep& n);

struct SubWithInclusion {
  Rep sub;
  Morphism incl;
};
struct QuotWithProjection {
  Rep quot;
  Morphism proj;
};

// Subspace tuple spanning an arrow-stable subspace of m (columns per vertex).
SubWithInclusion sub_from_subspaces(const Rep& m, const std::vector<Mat>& bases);
QuotWithProjection quotient_by_subspaces(const Rep& m, const std::vector<Mat>& bases);

struct FactorResult {
  Rep kernel;
  Morphism kernel_incl;
  Rep image;
  Morphism image_incl;
  Rep cokernel;
  Morphism cokernel_proj;
};
FactorResult factor(const Morphism& f);

// Just the kernel part of factor(), cheaper for large morphisms.
SubWithInclusion kernel_of(const Morphism& f);

SubWithInclusion radical_submodule(const Rep& m);
SubWithInclusion socle_submodule(const Rep& m);
QuotWithProjection top_quotient(const Rep& m);
std::vector<int> top_multiplicities(const Rep& m);

struct RadicalSeries {
  std::vector<Rep> terms;                        // M, rad M, rad^2 M, ..., 0
  std::vector<Morphism> inclusions;              // terms[i+1] -> terms[i]
  std::vector<std::vector<int>> layer_mults;     // simple multiplicities per layer
};
RadicalSeries radical_series(const Rep& m);
int module_loewy_length(const Rep& m);

struct SumDecomp {
  Rep sum;
  std::vector<Morphism> inject;
  std::vector<Morphism> project;
};
SumDecomp direct_sum(const AlgebraPtr& a, const std::vector<Rep>& parts);

// Standard duality: a module over `a` becomes one over `target`, which must
// be the structural opposite of `a` (same vertex/arrow numbering, arrows
// reversed).  Vertexwise transpose of the arrow actions.
Rep dual_to(const Rep& m, const AlgebraPtr& target);

bool is_projective(const Rep& m);

// Per-vertex lists of algebra basis paths (global indices) forming the
// canonical basis of the projective module at `vertex`.
std::vector<std::vector<int>> projective_basis_paths(const AlgebraPtr& a, int vertex);

// Factors `target` through the epimorphism `epi`: returns h with
// epi . h == target.  Requires the source of `target` to be projective (or
// the factorization to exist); nullopt when there is none.
std::optional<Morphism> factor_through_epi(const Morphism& target, const Morphism& epi);

// Smallest arrow-stable subspace tuple containing the seed columns.
std::vector<Mat> arrow_stable_closure(const Rep& m, std::vector<Mat> seed);

}  // namespace qhom

#endif
