#ifndef QHOM_DECOMPOSE_HPP
#define QHOM_DECOMPOSE_HPP

#include "qhom/rep.hpp"

namespace qhom {

struct RationalFieldUnsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Undecided : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  int dim_cap = 512;
  // exhaustive endomorphism search is used while |F|^{dim End} stays below
  // this budget; beyond it the radical of the endomorphism algebra decides
  long long exhaustive_budget = 1 << 16;
  int random_tries = 64;
  int recovery_tries = 512;
};

enum class LocalCertificate {
  EndDimOne,            // dim End = 1
  ExhaustiveSearch,     // all endomorphisms enumerated, none splits
  RadicalQuotientField  // End/rad End is a finite field
};

struct DecomposedPart {
  Rep part;
  int multiplicity;
  LocalCertificate certificate;
};

struct DecompositionResult {
  std::vector<DecomposedPart> parts;
  // inclusion of each copy into the input, flattened in part order;
  // stacking them vertexwise gives an isomorphism  (+) parts -> M
  std::vector<Morphism> copy_inclusions;
  Morphism witness;
};

DecompositionResult decompose(const Rep& m, const DecomposeOptions& opts = {});

bool is_isomorphic(const Rep& a, const Rep& b, const DecomposeOptions& opts = {});

// True iff every indecomposable summand of m occurs among the summands of t.
bool add_membership(const Rep& m, const Rep& t, const DecomposeOptions& opts = {});

// Both arguments must already be indecomposable.
bool indec_isomorphic(const Rep& a, const Rep& b);

// Locality of End(m) decided by the decomposition machinery.
bool end_is_local(const Rep& m, const DecomposeOptions& opts = {});

}  // namespace qhom

#endif
