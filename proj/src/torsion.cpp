#include "qhom/torsion.hpp"

#include <algorithm>
#include <cassert>

namespace qhom {

std::vector<int> composition_factors(const Rep& m) {
  std::vector<int> mult(m.dim.size(), 0);
  for (const auto& layer : radical_series(m).layer_mults)
    for (size_t v = 0; v < layer.size(); ++v) mult[v] += layer[v];
  return mult;
}

bool in_filtration_class(const Rep& m, const SimpleSet& v) {
  std::vector<int> factors = composition_factors(m);
  for (size_t u = 0; u < factors.size(); ++u) {
    if (factors[u] == 0) continue;
    if (!std::binary_search(v.begin(), v.end(), static_cast<int>(u))) return false;
  }
  return true;
}

SubWithInclusion torsion_radical(const Rep& m, const SimpleSet& v) {
  const Quiver& q = m.A->quiver();
  std::vector<bool> in_v(q.n_vertices(), false);
  for (int x : v) in_v[x] = true;

  // current submodule as subspace tuples in the coordinates of m
  std::vector<Mat> bases(q.n_vertices());
  for (int u = 0; u < q.n_vertices(); ++u)
    bases[u] = Mat::identity(m.A->field(), m.dim[u]);

  for (int guard = 0; guard <= m.total() + 1; ++guard) {
    auto cur = sub_from_subspaces(m, bases);
    auto rad = radical_submodule(cur.sub);
    bool changed = false;
    std::vector<Mat> next(q.n_vertices());
    for (int u = 0; u < q.n_vertices(); ++u) {
      if (in_v[u]) {
        // strip the V-part of the top at this vertex: keep only rad
        next[u] = column_space_basis(mul(bases[u], rad.incl.comp[u]));
        if (next[u].cols() != bases[u].cols()) changed = true;
      } else {
        next[u] = bases[u];
      }
    }
    if (!changed) return cur;
    bases = std::move(next);
  }
  assert(false && "torsion radical fixpoint failed to terminate");
  return sub_from_subspaces(m, bases);
}

LayerTrace t_layer_length(const Rep& m, const SimpleSet& v) {
  LayerTrace trace;
  Rep cur = m;
  for (int i = 0;; ++i) {
    trace.module_dims.push_back(cur.dim);
    auto t = torsion_radical(cur, v);
    trace.torsion_dims.push_back(t.sub.dim);
    if (t.sub.is_zero_rep()) {
      trace.value = i;
      return trace;
    }
    cur = radical_submodule(t.sub).sub;
  }
}

ExtValue pd_of_set(const AlgebraPtr& a, const SimpleSet& v, int cutoff,
                   const PdOptions& opts) {
  if (v.empty()) return ExtValue::finite(-1);
  ExtValue worst = ExtValue::finite(-1);
  bool exceeded = false;
  for (int u : v) {
    ExtValue pd =
        proj_dimension(standard_module(a, StandardKind::Simple, u), cutoff, opts);
    if (pd.kind == ExtValue::InfinitePeriodic) return pd;
    if (pd.kind == ExtValue::ExceedsCutoff) exceeded = true;
    if (pd.is_finite() && worst.is_finite() && pd.value > worst.value) worst = pd;
  }
  return exceeded ? ExtValue::exceeds(cutoff) : worst;
}

}  // namespace qhom
