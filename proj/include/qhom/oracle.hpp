#ifndef QHOM_ORACLE_HPP
#define QHOM_ORACLE_HPP

#include "qhom/submodule.hpp"

namespace qhom {

// --- extension bracket membership ---------------------------------------

enum class BracketMode { DirectFiltration, SummandClosed };

struct BracketCaps {
  int dimension_cap = 8;        // largest module the search will touch
  int ambient_extra_cap = 4;    // extra dimensions allowed for ambient summands
  LatticeCaps lattice;
  DecomposeOptions dec;
};

struct BracketQuery {
  Rep target;
  Rep generator;
  int level = 1;
  BracketMode mode = BracketMode::DirectFiltration;
  BracketCaps caps;
};

// One layer of a filtration witness: 0 -> sub -> ambient -> quotient -> 0
// with the sub certified in add(generator) and the quotient continuing the
// filtration.  In direct mode the ambient is the previous quotient itself;
// in summand-closed mode it may extend it by a complement.
struct WitnessStep {
  Rep ambient;
  Rep sub;
  Rep quotient;
  Morphism incl;  // sub -> ambient
  Morphism proj;  // ambient -> quotient
};

struct FiltrationWitness {
  std::vector<WitnessStep> steps;  // innermost last
};

struct BracketAnswer {
  enum Verdict { Yes, No, Unknown } verdict;
  FiltrationWitness witness;  // populated on Yes
};

// Direct-filtration mode enumerates submodules in add(generator) and recurses
// on quotients: complete within the caps, so both yes and no are certain.
// Summand-closed mode additionally searches ambient extensions M (+) C and is
// sound for yes only; exhaustion yields Unknown.
BracketAnswer bracket_membership(const BracketQuery& query);

// Independent check of a returned witness: exactness of every layer, add
// membership of every sub, and the chaining of quotients.
bool revalidate_witness(const FiltrationWitness& w, const Rep& target,
                        const Rep& generator, const DecomposeOptions& dec = {});

// --- enumerated module universe ------------------------------------------

struct UniverseCaps {
  int dim_cap = 6;
  long long ext_class_budget = 4096;
  size_t max_indecs = 96;
  size_t max_multisets = 4096;
  int max_rounds = 10;
  DecomposeOptions dec;
};

struct Universe {
  std::vector<Rep> indecs;
  bool complete = true;  // false when any enumeration budget was hit
};

// Middle terms 0 -> sub -> E -> quot -> 0, one per enumerated extension
// class (the zero class is skipped; the split middle is just the sum).
// Returns nothing when the class count exceeds the budget.
std::optional<std::vector<Rep>> extension_middles(const Rep& quot, const Rep& sub,
                                                  long long class_budget);

// All indecomposables of total dimension <= dim_cap, found by closing the
// simples, projectives and injectives under extensions by simple tops.
Universe enumerate_indecomposables(const AlgebraPtr& a, const UniverseCaps& caps = {});

// All iso classes of modules with dim <= cap as multisets over the universe.
std::vector<Rep> universe_modules(const AlgebraPtr& a, const Universe& u, int dim_cap);

// --- extension dimension bounds -------------------------------------------

struct ExtdimCaps {
  UniverseCaps universe;
  int witness_dim_cap = 24;  // total dimension allowed for the witness T
  BracketCaps bracket;
};

struct ExtdimResult {
  int lower = 0;
  std::optional<int> upper;
  Rep witness;       // the generator realizing the upper bound
  bool within_caps = true;
  std::string note;
};

ExtdimResult extdim_bounds(const AlgebraPtr& a, const ExtdimCaps& caps = {});

// --- syzygy bracket witnesses ----------------------------------------------

enum class ChainDirection { Resolution, Coresolution };

struct SyzygyWitnessStep {
  Rep ambient;
  Rep sub;
  Rep quotient;
  Rep class_generator;  // the quotient was certified in add of this module
};

struct SyzygyBracketWitness {
  std::vector<SyzygyWitnessStep> steps;  // outermost first
  bool validated = false;
};

// For an exact chain (resolution direction: 0 -> M -> X_0 -> ... -> X_{-n} -> 0,
// given as ExactChain terms [X_{-n}, ..., X_0, M]) constructs the explicit
// witness chain placing M in [O^n(X_{-n})]_1 * ... * [O(X_{-1})]_1 * [X_0]_1,
// validating every layer through direct add-membership.  The coresolution
// direction is handled by duality and uses cosyzygy shifts.
SyzygyBracketWitness verify_syzygy_bracket(const ExactChain& chain,
                                           ChainDirection direction,
                                           const BracketCaps& caps = {});

}  // namespace qhom

#endif
