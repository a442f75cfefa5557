#ifndef QHOM_SUBMODULE_HPP
#define QHOM_SUBMODULE_HPP

#include "qhom/resolution.hpp"

namespace qhom {

// Full submodule lattice of a representation over a prime field, as
// canonical subspace tuples (columns per vertex).  Every submodule is a sum
// of cyclic submodules generated by single vectors, so a breadth-first
// closure over cyclic generators enumerates the lattice.
struct SubmoduleLattice {
  std::vector<std::vector<Mat>> submodules;  // includes 0 and the module
};

struct LatticeCaps {
  size_t count_cap = 1 << 18;
  // refuse to enumerate vectors past this many per vertex
  unsigned long long vector_cap = 1 << 20;
};

SubmoduleLattice all_submodules(const Rep& m, const LatticeCaps& caps = {});

// canonical serialization for dedup and deterministic ordering
std::string subspace_key(const std::vector<Mat>& bases);

}  // namespace qhom

#endif
