#ifndef QHOM_CORPUS_HPP
#define QHOM_CORPUS_HPP

#include "qhom/bounds.hpp"
#include "qhom/io.hpp"

namespace qhom {

struct UnknownEntry : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One expected value, addressed by a dotted path into the entry report.
// Provenance is "external" (a value from the literature), "derived"
// (computed independently by hand) or "elementary".
struct Expectation {
  std::string path;
  Json expected;
  std::string provenance;
  std::string citation;
};

struct CorpusEntry {
  std::string name;
  std::string document;
  int cutoff = 32;
  int id_cutoff = -1;  // cutoff for the injective dimensions; -1 means cutoff
  int max_length = 32;
  int scan_depth = 8;
  bool run_scan = false;
  bool run_extdim = false;
  std::vector<std::string> bound_v;  // vertex names of the documented V
  std::vector<Expectation> expectations;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_lookup(const std::string& name);

// The standard invariants block shared by the CLI and the corpus runner.
Json invariants_report(const AlgebraPtr& a, int cutoff, std::uint64_t seed,
                       int id_cutoff = -1);

// The bounds block for a chosen set of simples.
Json bounds_report(const AlgebraPtr& a, const SimpleSet& v, int cutoff,
                   std::uint64_t seed);

// Full report for one entry; deterministic for a fixed seed.
Json entry_report(const CorpusEntry& entry, std::uint64_t seed,
                  int cutoff_override = -1);

struct VerifyOptions {
  std::vector<std::string> names;  // empty means all
  std::uint64_t seed = 0;
  int cutoff_override = -1;
  int threads = 1;
};

struct VerifyOutcome {
  Json report;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
};

// Runs every requested entry (concurrently when threads > 1), compares the
// reports against the stored expectations and assembles one deterministic
// JSON report sorted by entry name.
VerifyOutcome run_verification(const VerifyOptions& opts);

}  // namespace qhom

#endif
