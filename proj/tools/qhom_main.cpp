#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qhom/corpus.hpp"
#include "qhom/oracle.hpp"

using namespace qhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExpectation = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimpleSet parse_vertex_list(const Quiver& q, const std::string& csv) {
  SimpleSet v;
  if (csv.empty()) return v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int id = q.vertex_id(item);
    if (id < 0) throw std::runtime_error("unknown vertex in --simples: " + item);
    v.push_back(id);
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void print_human(const Json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      print_human(value, prefix + key + ".");
    } else {
      std::cout << prefix << key << " = " << value.dump() << "\n";
    }
  }
}

int default_threads() {
  if (const char* env = std::getenv("HOMOLOG_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhom: exact homological invariants of bound quiver algebras"};
  app.require_subcommand(1);

  std::string file, simples_csv, module_name, generator_name, mode = "direct";
  std::string samples_csv;
  std::vector<std::string> corpus_names;
  int cutoff = 32, max_length = 32, depth = 8, dim_cap = 512, level = 1;
  int it_m = 0, it_n = 0;
  std::uint64_t seed = 0;
  bool as_json = false, best_v = false;

  auto* inv = app.add_subcommand("invariants", "algebra invariants from a file");
  inv->add_option("file", file)->required();
  inv->add_option("--cutoff", cutoff);
  inv->add_option("--max-length", max_length);
  inv->add_option("--seed", seed);
  inv->add_flag("--json", as_json);

  auto* bnd = app.add_subcommand("bounds", "derived dimension bound report");
  bnd->add_option("file", file)->required();
  bnd->add_option("--simples", simples_csv,
                  "comma separated vertex names for the simple set V");
  bnd->add_flag("--best-v", best_v, "search for the best V over finite-pd simples");
  bnd->add_option("--cutoff", cutoff);
  bnd->add_option("--max-length", max_length);
  bnd->add_option("--seed", seed);
  bnd->add_flag("--json", as_json);

  auto* scan = app.add_subcommand("syzygy-scan", "syzygy finiteness scan");
  scan->add_option("file", file)->required();
  scan->add_option("--depth", depth);
  scan->add_option("--dim-cap", dim_cap);
  scan->add_option("--max-length", max_length);
  scan->add_option("--seed", seed);
  scan->add_flag("--json", as_json);

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force decision procedures");
  auto* bracket = oracle_cmd->add_subcommand(
      "bracket", "extension bracket membership [T]_n");
  bracket->add_option("file", file)->required();
  bracket->add_option("--module", module_name)->required();
  bracket->add_option("--generator", generator_name)->required();
  bracket->add_option("--level", level)->required();
  bracket->add_option("--mode", mode)->check(CLI::IsMember({"direct", "summand"}));
  bracket->add_option("--max-length", max_length);
  bracket->add_option("--seed", seed);

  auto* itc = app.add_subcommand("it-check", "check an (m,n) Igusa-Todorov "
                                             "certificate on samples");
  itc->add_option("file", file)->required();
  itc->add_option("--m", it_m)->required();
  itc->add_option("--n", it_n)->required();
  itc->add_option("--module", module_name, "module block naming the candidate V")
      ->required();
  itc->add_option("--samples", samples_csv,
                  "comma separated module blocks; defaults to all simples");
  itc->add_option("--max-length", max_length);
  itc->add_option("--seed", seed);

  auto* cc = app.add_subcommand("check-corpus", "verify the built-in corpus");
  cc->add_option("names", corpus_names, "entries to verify; all when omitted");
  cc->add_option("--seed", seed);
  cc->add_option("--cutoff", cutoff, "override the per-entry cutoffs");
  bool cc_cutoff_given = false;
  cc->callback([&]() { cc_cutoff_given = cc->count("--cutoff") > 0; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv) {
      Document doc = parse_document(read_file(file));
      AlgebraPtr a = document_algebra(doc, max_length);
      Json rep;
      rep["algebra"] = Json{{"name", file},
                            {"dimension", a->dimension()},
                            {"field", a->field().name()}};
      rep["invariants"] = invariants_report(a, cutoff, seed);
      if (as_json)
        std::cout << emit_report(rep);
      else
        print_human(rep);
      return kExitOk;
    }

    if (*bnd) {
      Document doc = parse_document(read_file(file));
      AlgebraPtr a = document_algebra(doc, max_length);
      Json rep;
      if (best_v) {
        PdOptions opts;
        opts.dec.seed = seed;
        BestVResult best = best_v_search(a, cutoff, opts);
        Json vlist = Json::array();
        for (int u : best.v) vlist.push_back(a->quiver().vertex_name(u));
        rep["best_V"] = vlist;
        rep["exhaustive"] = best.exhaustive;
        rep["bounds"] = bounds_report(a, best.v, cutoff, seed);
      } else {
        SimpleSet v = parse_vertex_list(a->quiver(), simples_csv);
        rep["bounds"] = bounds_report(a, v, cutoff, seed);
      }
      if (as_json)
        std::cout << emit_report(rep);
      else
        print_human(rep);
      return kExitOk;
    }

    if (*scan) {
      Document doc = parse_document(read_file(file));
      AlgebraPtr a = document_algebra(doc, max_length);
      ScanOptions sopts;
      sopts.dim_cap = dim_cap;
      sopts.dec.seed = seed;
      std::vector<Rep> seeds;
      for (int u = 0; u < a->quiver().n_vertices(); ++u)
        seeds.push_back(standard_module(a, StandardKind::Simple, u));
      SyzygyCatalog cat = syzygy_scan(a, seeds, depth, sopts);
      Json rep;
      rep["depth"] = depth;
      rep["stabilized_at"] =
          cat.stabilized_at ? Json(*cat.stabilized_at) : Json(nullptr);
      Json per_depth = Json::array();
      for (const auto& classes : cat.per_depth) {
        Json lvl = Json::array();
        for (const Rep& r : classes) {
          Json dims = Json::array();
          for (int d : r.dim) dims.push_back(d);
          lvl.push_back(dims);
        }
        per_depth.push_back(lvl);
      }
      rep["classes_per_depth"] = per_depth;
      rep["note"] =
          "stabilization is evidence for n-syzygy-finiteness, not a proof; "
          "indecomposability is certified over the ground prime field";
      if (as_json)
        std::cout << emit_report(rep);
      else
        print_human(rep);
      return kExitOk;
    }

    if (*bracket) {
      Document doc = parse_document(read_file(file));
      AlgebraPtr a = document_algebra(doc, max_length);
      BracketQuery q;
      q.target = document_module(doc, a, module_name);
      q.generator = document_module(doc, a, generator_name);
      q.level = level;
      q.mode = mode == "direct" ? BracketMode::DirectFiltration
                                : BracketMode::SummandClosed;
      q.caps.dec.seed = seed;
      BracketAnswer ans = bracket_membership(q);
      switch (ans.verdict) {
        case BracketAnswer::Yes: {
          std::cout << "yes\n";
          for (const auto& s : ans.witness.steps) {
            std::cout << "  ambient";
            for (int d : s.ambient.dim) std::cout << " " << d;
            std::cout << " | sub";
            for (int d : s.sub.dim) std::cout << " " << d;
            std::cout << " | quotient";
            for (int d : s.quotient.dim) std::cout << " " << d;
            std::cout << "\n";
          }
          return kExitOk;
        }
        case BracketAnswer::No:
          std::cout << "no\n";
          return kExitOk;
        case BracketAnswer::Unknown:
          std::cout << "unknown\n";
          return kExitUndecided;
      }
      return kExitOk;
    }

    if (*itc) {
      Document doc = parse_document(read_file(file));
      AlgebraPtr a = document_algebra(doc, max_length);
      ITCertificate cert;
      cert.m = it_m;
      cert.n = it_n;
      cert.module = document_module(doc, a, module_name);
      std::vector<Rep> samples;
      if (samples_csv.empty()) {
        for (int u = 0; u < a->quiver().n_vertices(); ++u)
          samples.push_back(standard_module(a, StandardKind::Simple, u));
      } else {
        std::stringstream ss(samples_csv);
        std::string item;
        while (std::getline(ss, item, ','))
          samples.push_back(document_module(doc, a, item));
      }
      ITCheckCaps caps;
      caps.dec.seed = seed;
      ITCheckResult res = check_it_certificate(a, cert, samples, caps);
      switch (res.verdict) {
        case ITVerdict::VerifiedOnSamples:
          std::cout << "verified-on-samples: " << res.detail << "\n";
          return kExitOk;
        case ITVerdict::Refuted:
          std::cout << "refuted: " << res.detail << "\n";
          return kExitExpectation;
        case ITVerdict::Undecided:
          std::cout << "undecided: " << res.detail << "\n";
          return kExitUndecided;
      }
      return kExitOk;
    }

    if (*cc) {
      VerifyOptions opts;
      opts.names = corpus_names;
      opts.seed = seed;
      if (cc_cutoff_given) opts.cutoff_override = cutoff;
      opts.threads = default_threads();
      VerifyOutcome outcome = run_verification(opts);
      std::cout << emit_report(outcome.report);
      return outcome.ok() ? kExitOk : kExitExpectation;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnknownEntry& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const Undecided& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
