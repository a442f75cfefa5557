#ifndef QHOM_BOUNDS_HPP
#define QHOM_BOUNDS_HPP

#include <map>
#include <optional>

#include "qhom/torsion.hpp"

namespace qhom {

struct BoundEntry {
  std::string name;
  std::string formula;
  std::map<std::string, std::string> inputs;
  std::optional<long long> value;
  std::string na_reason;  // set when value is absent
};

struct BoundReport {
  SimpleSet v;
  ExtValue pd_v;
  int ll_tv = 0;
  std::optional<int> itdim_upper;  // absent when pd V is not finite
  std::vector<BoundEntry> entries;
  std::optional<long long> best;
};

// Evaluates every derived-dimension bound formula from computed inputs.
BoundReport derived_dim_bounds(const AlgebraPtr& a, const SimpleSet& v, int cutoff,
                               const PdOptions& opts = {});

// max{ll^{t_V}(A) - 2, 0}; requires every simple in v to have finite
// projective dimension within the cutoff (throws std::invalid_argument).
int itdim_upper(const AlgebraPtr& a, const SimpleSet& v, int cutoff,
                const PdOptions& opts = {});

long long mn_it_bound(long long m, long long n);

struct ITCertificate {
  int m = 0;
  int n = 0;
  Rep module;  // the candidate Igusa-Todorov module V
};

enum class ITVerdict { VerifiedOnSamples, Refuted, Undecided };

struct ITCheckResult {
  ITVerdict verdict;
  std::string detail;
};

struct ITCheckCaps {
  int multiplicity_cap = 8;
  DecomposeOptions dec;
};

// Checks the certificate on the given samples: for each sample M, seeks an
// exact chain 0 -> V_m -> ... -> V_0 -> Omega^n(M) -> 0 with V_i in add V.
// "verified" and refutations made before any epimorphism choice are certain;
// everything else is reported undecided.
ITCheckResult check_it_certificate(const AlgebraPtr& a, const ITCertificate& cert,
                                   const std::vector<Rep>& samples,
                                   const ITCheckCaps& caps = {});

struct BestVResult {
  SimpleSet v;
  BoundReport report;
  bool exhaustive = true;
};

// Optimizes the choice of V over subsets of the finite-pd simples:
// exhaustive for up to 2^20 subsets, greedy single-removal beyond that.
// Ties break to the lexicographically least subset.
BestVResult best_v_search(const AlgebraPtr& a, int cutoff, const PdOptions& opts = {});

}  // namespace qhom

#endif
