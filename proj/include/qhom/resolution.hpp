#ifndef QHOM_RESOLUTION_HPP
#define QHOM_RESOLUTION_HPP

#include <optional>

#include "qhom/decompose.hpp"
#include "qhom/rep.hpp"

namespace qhom {

struct NotExact : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSplitSummand : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A homological dimension value: finite, beyond the cutoff, or certified
// infinite through a syzygy periodicity witness.
struct ExtValue {
  enum Kind { Finite, ExceedsCutoff, InfinitePeriodic } kind = Finite;
  int value = 0;  // the dimension, or the cutoff used
  int period_from = -1, period_to = -1;

  static ExtValue finite(int v) { return {Finite, v, -1, -1}; }
  static ExtValue exceeds(int cutoff) { return {ExceedsCutoff, cutoff, -1, -1}; }
  static ExtValue periodic(int a, int b, int cutoff) {
    return {InfinitePeriodic, cutoff, a, b};
  }
  bool is_finite() const { return kind == Finite; }
  std::string str() const;
  friend bool operator==(const ExtValue& a, const ExtValue& b) {
    return a.kind == b.kind && a.value == b.value;
  }
};

struct CoverResult {
  Rep cover;
  Morphism epi;
  std::vector<int> mults;  // projective multiplicities per vertex
};
CoverResult projective_cover(const Rep& m);

Rep syzygy(const Rep& m, int n);
Rep cosyzygy(const Rep& m, int n);

struct MinimalResolution {
  Rep module;
  std::vector<Rep> terms;                  // projective terms P_0, P_1, ...
  std::vector<std::vector<int>> term_mults;
  std::vector<Morphism> differentials;     // d_0: P_0 -> module, d_i: P_i -> P_{i-1}
  std::vector<Rep> syzygies;               // Omega^1, Omega^2, ...
  bool truncated = false;
  int cutoff = 0;
};
MinimalResolution minimal_resolution(const Rep& m, int depth);

struct PdOptions {
  int periodicity_dim_cap = 64;  // syzygies larger than this skip the iso check
  int periodicity_attempts = 16;  // budget on isomorphism tests per call
  DecomposeOptions dec;
};
ExtValue proj_dimension(const Rep& m, int cutoff, const PdOptions& opts = {});
ExtValue global_dimension(const AlgebraPtr& a, int cutoff, const PdOptions& opts = {});

struct GorensteinReport {
  bool selfinjective = false;
  ExtValue left_id;
  ExtValue right_id;
};
GorensteinReport self_injectivity_and_gorenstein(const AlgebraPtr& a, int cutoff,
                                                 const PdOptions& opts = {});

// 0 -> A --incl--> B --proj--> C -> 0
struct ShortExact {
  Morphism incl;
  Morphism proj;
};
void validate_exact(const ShortExact& s);  // throws NotExact

// Horseshoe construction: a (generally non-minimal) projective resolution of
// the middle term whose i-th term is P_i(A) (+) P_i(C).
struct HorseshoeResolution {
  std::vector<Rep> terms;
  std::vector<std::vector<int>> term_mults;
  std::vector<Morphism> differentials;  // d_0: terms[0] -> B
};
HorseshoeResolution horseshoe(const ShortExact& ses, int depth);

// Kernel sequence of a short exact sequence: 0 -> O(A) -> K -> O(C) -> 0
// where K is the kernel of the horseshoe epimorphism P(A) (+) P(C) -> B,
// isomorphic to O(B) plus a projective summand.
ShortExact syzygy_of_ses(const ShortExact& ses);

// An exact chain 0 -> terms[n] -> ... -> terms[1] -> terms[0] -> 0
// with maps[i]: terms[i+1] -> terms[i].
struct ExactChain {
  std::vector<Rep> terms;
  std::vector<Morphism> maps;
};
void validate_chain_exact(const ExactChain& c);  // throws NotExact

// Designated splitting of the end term of a chain as M (+) P.
struct SummandWitness {
  Rep m;
  Rep p;
  Morphism incl_m, incl_p;  // into the end term
  Morphism proj_m, proj_p;  // out of the end term
};

// Projective stripping: from  0 -> M_n -> ... -> M_0 -> M (+) P -> 0
// produces  0 -> M_n -> ... -> M_2 -> M_1 (+) P -> M_0 -> M -> 0.
ExactChain strip_projective(const ExactChain& chain, const SummandWitness& split);

struct ScanOptions {
  int dim_cap = 512;
  int class_cap = 512;
  DecomposeOptions dec;
};

struct SyzygyCatalog {
  std::vector<std::vector<Rep>> per_depth;  // indecomposable non-projective classes
  std::optional<int> stabilized_at;
};

// Iterates syzygies on the seeds, recording indecomposable non-projective
// summands per depth.  The stabilization verdict is heuristic evidence for
// n-syzygy-finiteness, not a proof: the scan sees only the seeds' closure.
SyzygyCatalog syzygy_scan(const AlgebraPtr& a, const std::vector<Rep>& seeds,
                          int depth, const ScanOptions& opts = {});

}  // namespace qhom

#endif
