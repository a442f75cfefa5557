#ifndef QHOM_TORSION_HPP
#define QHOM_TORSION_HPP

#include "qhom/resolution.hpp"

namespace qhom {

// Subsets of simples are given by their vertex indices, sorted and unique.
using SimpleSet = std::vector<int>;

// Multiset of composition factors, read off the radical series.
std::vector<int> composition_factors(const Rep& m);  // per-vertex multiplicity

// True iff every composition factor of m lies in V.
bool in_filtration_class(const Rep& m, const SimpleSet& v);

// The torsion radical t_V(M): the smallest submodule N with M/N filtered by
// the simples in V.  Computed as the descending fixpoint
//   N <- rad N + (preimage of the V'-isotypic part of top N)
// which strips V-simples off the top until none remain.
SubWithInclusion torsion_radical(const Rep& m, const SimpleSet& v);

struct LayerTrace {
  std::vector<std::vector<int>> module_dims;   // F^i(M) dimension vectors
  std::vector<std::vector<int>> torsion_dims;  // t_V(F^i(M)) dimension vectors
  int value = 0;
};

// Radical layer length under F = rad . t_V; the value is the least i with
// t_V(F^i(M)) = 0.
LayerTrace t_layer_length(const Rep& m, const SimpleSet& v);

// max pd of the simples in v; -1 when v is empty.
ExtValue pd_of_set(const AlgebraPtr& a, const SimpleSet& v, int cutoff,
                   const PdOptions& opts = {});

}  // namespace qhom

#endif
