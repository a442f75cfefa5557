#include "qhom/resolution.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace qhom {

std::string ExtValue::str() const {
  switch (kind) {
    case Finite:
      return std::to_string(value);
    case ExceedsCutoff:
      return ">" + std::to_string(value);
    case InfinitePeriodic:
      return "infinite (periodic)";
  }
  return "?";
}

CoverResult projective_cover(const Rep& m) {
  const AlgebraPtr& A = m.A;
  const Quiver& q = A->quiver();
  const Field& F = A->field();
  auto rad = radical_submodule(m);
  auto quot = quotient_by_subspaces(m, rad.incl.comp);

  // generators: a section of the top projection, one column per generator
  std::vector<Mat> gens(q.n_vertices());
  std::vector<int> mults(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) {
    int k = quot.quot.dim[v];
    mults[v] = k;
    if (k == 0) {
      gens[v] = Mat(F, m.dim[v], 0);
      continue;
    }
    auto s = solve(quot.proj.comp[v], Mat::identity(F, k));
    assert(s);
    gens[v] = *s;
  }

  std::vector<Rep> parts;
  std::vector<std::pair<int, int>> part_gen;  // (vertex, generator column)
  for (int v = 0; v < q.n_vertices(); ++v)
    for (int c = 0; c < mults[v]; ++c) {
      parts.push_back(standard_module(A, StandardKind::Projective, v));
      part_gen.push_back({v, c});
    }
  SumDecomp sd = direct_sum(A, parts);

  // Images of basis paths under "act on the generator", computed by walking
  // path prefixes: image(p.a) = act[a] * image(p).
  Morphism epi = zero_morphism(sd.sum, m);
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    auto [v, c] = part_gen[pi];
    auto local = projective_basis_paths(A, v);
    std::vector<int> local_of(A->dimension(), -1);
    for (int u = 0; u < q.n_vertices(); ++u)
      for (size_t j = 0; j < local[u].size(); ++j)
        local_of[local[u][j]] = static_cast<int>(j);
    std::vector<std::vector<Scalar>> image(A->dimension());
    // global basis order visits prefixes before their extensions
    for (int g : A->basis_with_source(v)) {
      const BasisElement& be = A->basis_element(g);
      std::vector<Scalar>& img = image[g];
      img.assign(m.dim[be.tgt], F.zero());
      if (be.len == 0) {
        for (int r = 0; r < m.dim[v]; ++r) img[r] = gens[v].at(r, c);
      } else {
        auto [parent, arrow] = A->parent_of(g);
        const std::vector<Scalar>& pimg = image[parent];
        const Mat& act = m.act[arrow];
        for (int r = 0; r < m.dim[be.tgt]; ++r) {
          Scalar acc = F.zero();
          for (int t = 0; t < act.cols(); ++t)
            if (!F.is_zero(act.at(r, t)))
              acc = F.add(acc, F.mul(act.at(r, t), pimg[t]));
          img[r] = acc;
        }
      }
    }
    // write the columns of this part into the stacked epimorphism
    for (int u = 0; u < q.n_vertices(); ++u) {
      int base = 0;
      for (size_t pj = 0; pj < pi; ++pj) base += parts[pj].dim[u];
      for (size_t j = 0; j < local[u].size(); ++j) {
        const std::vector<Scalar>& img = image[local[u][j]];
        for (int r = 0; r < m.dim[u]; ++r)
          epi.comp[u].at(r, base + static_cast<int>(j)) = img[r];
      }
    }
  }
  return {sd.sum, std::move(epi), std::move(mults)};
}

Rep syzygy(const Rep& m, int n) {
  Rep cur = m;
  for (int i = 0; i < n; ++i) {
    if (cur.is_zero_rep()) return cur;
    auto cover = projective_cover(cur);
    cur = kernel_of(cover.epi).sub;
  }
  return cur;
}

Rep cosyzygy(const Rep& m, int n) {
  AlgebraPtr op = m.A->opposite();
  Rep d = dual_to(m, op);
  Rep s = syzygy(d, n);
  return dual_to(s, m.A);
}

MinimalResolution minimal_resolution(const Rep& m, int depth) {
  MinimalResolution res;
  res.module = m;
  res.cutoff = depth;
  Rep cur = m;
  Morphism prev_incl;  // inclusion of the previous syzygy into the previous term
  for (int i = 0; i <= depth; ++i) {
    if (cur.is_zero_rep()) {
      res.truncated = false;
      return res;
    }
    auto cover = projective_cover(cur);
    res.terms.push_back(cover.cover);
    res.term_mults.push_back(cover.mults);
    // d_i factors as the cover epi onto the syzygy followed by its inclusion
    res.differentials.push_back(i == 0 ? cover.epi : compose(cover.epi, prev_incl));
    auto fac = factor(cover.epi);
    prev_incl = fac.kernel_incl;
    res.syzygies.push_back(fac.kernel);
    cur = fac.kernel;
  }
  res.truncated = !cur.is_zero_rep();
  return res;
}

namespace {
bool maybe_isomorphic(const Rep& a, const Rep& b, const PdOptions& opts) {
  if (a.dim != b.dim) return false;
  if (a.total() > opts.periodicity_dim_cap) return false;
  if (a.A->field().is_rational()) {
    // one-sided sound check
    for (const auto& f : hom_basis(a, b))
      if (morphism_is_iso(f)) return true;
    return false;
  }
  try {
    return is_isomorphic(a, b, opts.dec);
  } catch (const Undecided&) {
    return false;
  }
}
}  // namespace

ExtValue proj_dimension(const Rep& m, int cutoff, const PdOptions& opts) {
  Rep cur = m;
  std::vector<Rep> history;
  int attempts = opts.periodicity_attempts;
  for (int n = 0; n <= cutoff; ++n) {
    if (is_projective(cur)) return ExtValue::finite(n);
    for (size_t a = 0; a < history.size() && attempts > 0; ++a) {
      if (history[a].dim != cur.dim) continue;
      --attempts;
      if (maybe_isomorphic(history[a], cur, opts))
        return ExtValue::periodic(static_cast<int>(a), n, cutoff);
    }
    if (cur.total() <= opts.periodicity_dim_cap) history.push_back(cur);
    auto cover = projective_cover(cur);
    cur = kernel_of(cover.epi).sub;
  }
  return ExtValue::exceeds(cutoff);
}

ExtValue global_dimension(const AlgebraPtr& a, int cutoff, const PdOptions& opts) {
  ExtValue worst = ExtValue::finite(0);
  bool exceeded = false;
  for (int v = 0; v < a->quiver().n_vertices(); ++v) {
    ExtValue pd =
        proj_dimension(standard_module(a, StandardKind::Simple, v), cutoff, opts);
    if (pd.kind == ExtValue::InfinitePeriodic) return pd;
    if (pd.kind == ExtValue::ExceedsCutoff) exceeded = true;
    if (pd.is_finite() && worst.is_finite() && pd.value > worst.value) worst = pd;
  }
  return exceeded ? ExtValue::exceeds(cutoff) : worst;
}

GorensteinReport self_injectivity_and_gorenstein(const AlgebraPtr& a, int cutoff,
                                                 const PdOptions& opts) {
  GorensteinReport rep;
  const int nv = a->quiver().n_vertices();
  rep.selfinjective = true;
  for (int i = 0; i < nv && rep.selfinjective; ++i) {
    Rep p = standard_module(a, StandardKind::Projective, i);
    bool injective = false;
    for (int j = 0; j < nv && !injective; ++j)
      injective = indec_isomorphic(p, standard_module(a, StandardKind::Injective, j));
    rep.selfinjective = injective;
  }
  // The injective dimension of the regular module on either side equals the
  // projective dimension of the sum of indecomposable injectives over that
  // side, computed through the standard duality.
  auto id_via_injectives = [&](const AlgebraPtr& alg) {
    std::vector<Rep> inj;
    for (int i = 0; i < alg->quiver().n_vertices(); ++i)
      inj.push_back(standard_module(alg, StandardKind::Injective, i));
    return proj_dimension(direct_sum(alg, inj).sum, cutoff, opts);
  };
  rep.left_id = id_via_injectives(a);
  rep.right_id = id_via_injectives(a->opposite());
  return rep;
}

void validate_exact(const ShortExact& s) {
  const Rep& a = s.incl.src;
  const Rep& b = s.incl.dst;
  const Rep& c = s.proj.dst;
  if (!is_valid_morphism(s.incl) || !is_valid_morphism(s.proj))
    throw NotExact("maps are not module morphisms");
  for (size_t v = 0; v < a.dim.size(); ++v) {
    int iv = static_cast<int>(v);
    if (rank(s.incl.comp[iv]) != a.dim[iv]) throw NotExact("first map not injective");
    if (rank(s.proj.comp[iv]) != c.dim[iv])
      throw NotExact("second map not surjective");
    if (!mul(s.proj.comp[iv], s.incl.comp[iv]).is_zero())
      throw NotExact("composite of the two maps is nonzero");
    if (a.dim[iv] + c.dim[iv] != b.dim[iv])
      throw NotExact("dimensions are not additive; sequence cannot be exact");
  }
}

ShortExact syzygy_of_ses(const ShortExact& ses) {
  const Rep& a = ses.incl.src;
  const Rep& b = ses.incl.dst;
  const Rep& c = ses.proj.dst;
  auto cov_a = projective_cover(a);
  auto cov_c = projective_cover(c);
  auto lift = factor_through_epi(cov_c.epi, ses.proj);
  assert(lift);
  SumDecomp sd = direct_sum(b.A, {cov_a.cover, cov_c.cover});
  Morphism epi_b =
      add_morphisms(compose(sd.project[0], compose(cov_a.epi, ses.incl)),
                    compose(sd.project[1], *lift));
  auto ka = factor(cov_a.epi);
  auto kb = factor(epi_b);
  auto kc = factor(cov_c.epi);
  Morphism ka_in_sum = compose(ka.kernel_incl, sd.inject[0]);
  Morphism ka_to_kb = zero_morphism(ka.kernel, kb.kernel);
  for (size_t v = 0; v < ka_to_kb.comp.size(); ++v) {
    auto x = solve(kb.kernel_incl.comp[v], ka_in_sum.comp[v]);
    assert(x);
    ka_to_kb.comp[v] = *x;
  }
  Morphism kb_in_pc = compose(kb.kernel_incl, sd.project[1]);
  Morphism kb_to_kc = zero_morphism(kb.kernel, kc.kernel);
  for (size_t v = 0; v < kb_to_kc.comp.size(); ++v) {
    auto x = solve(kc.kernel_incl.comp[v], kb_in_pc.comp[v]);
    assert(x);
    kb_to_kc.comp[v] = *x;
  }
  return ShortExact{ka_to_kb, kb_to_kc};
}

HorseshoeResolution horseshoe(const ShortExact& ses, int depth) {
  validate_exact(ses);
  HorseshoeResolution out;
  ShortExact cur = ses;
  Morphism prev_incl;
  for (int i = 0; i <= depth; ++i) {
    const Rep& a = cur.incl.src;
    const Rep& b = cur.incl.dst;
    const Rep& c = cur.proj.dst;
    if (b.is_zero_rep()) break;
    auto cov_a = projective_cover(a);
    auto cov_c = projective_cover(c);
    auto lift = factor_through_epi(cov_c.epi, cur.proj);
    assert(lift);
    SumDecomp sd = direct_sum(b.A, {cov_a.cover, cov_c.cover});
    Morphism epi_b =
        add_morphisms(compose(sd.project[0], compose(cov_a.epi, cur.incl)),
                      compose(sd.project[1], *lift));
    std::vector<int> mults(cov_a.mults.size());
    for (size_t v = 0; v < mults.size(); ++v)
      mults[v] = cov_a.mults[v] + cov_c.mults[v];
    out.terms.push_back(sd.sum);
    out.term_mults.push_back(std::move(mults));
    out.differentials.push_back(i == 0 ? epi_b : compose(epi_b, prev_incl));
    auto ka = factor(cov_a.epi);
    auto kb = factor(epi_b);
    auto kc = factor(cov_c.epi);
    prev_incl = kb.kernel_incl;
    if (i == depth) break;
    // induced short exact sequence of the kernels
    Morphism ka_in_sum = compose(ka.kernel_incl, sd.inject[0]);
    Morphism ka_to_kb = zero_morphism(ka.kernel, kb.kernel);
    for (size_t v = 0; v < ka_to_kb.comp.size(); ++v) {
      auto x = solve(kb.kernel_incl.comp[v], ka_in_sum.comp[v]);
      assert(x);
      ka_to_kb.comp[v] = *x;
    }
    Morphism kb_in_pc = compose(kb.kernel_incl, sd.project[1]);
    Morphism kb_to_kc = zero_morphism(kb.kernel, kc.kernel);
    for (size_t v = 0; v < kb_to_kc.comp.size(); ++v) {
      auto x = solve(kc.kernel_incl.comp[v], kb_in_pc.comp[v]);
      assert(x);
      kb_to_kc.comp[v] = *x;
    }
    cur = ShortExact{ka_to_kb, kb_to_kc};
  }
  return out;
}

void validate_chain_exact(const ExactChain& c) {
  const size_t n = c.terms.size();
  if (n == 0) throw NotExact("empty chain");
  if (c.maps.size() + 1 != n) throw NotExact("chain shape mismatch");
  for (const auto& m : c.maps)
    if (!is_valid_morphism(m)) throw NotExact("chain map is not a morphism");
  if (n == 1) {
    if (c.terms[0].total() != 0) throw NotExact("single-term chain must be zero");
    return;
  }
  const size_t nv = c.terms[0].dim.size();
  for (size_t v = 0; v < nv; ++v) {
    int iv = static_cast<int>(v);
    if (rank(c.maps.back().comp[iv]) != c.terms.back().dim[iv])
      throw NotExact("leftmost map not injective");
    if (rank(c.maps.front().comp[iv]) != c.terms.front().dim[iv])
      throw NotExact("rightmost map not surjective");
    for (size_t i = 0; i + 1 < c.maps.size(); ++i) {
      if (!mul(c.maps[i].comp[iv], c.maps[i + 1].comp[iv]).is_zero())
        throw NotExact("consecutive chain maps do not compose to zero");
      int rk_in = rank(c.maps[i + 1].comp[iv]);
      Mat ker = kernel_basis(c.maps[i].comp[iv]);
      if (rk_in != ker.cols()) throw NotExact("chain not exact at an interior term");
    }
  }
}

ExactChain strip_projective(const ExactChain& chain, const SummandWitness& split) {
  validate_chain_exact(chain);
  const Rep& t = chain.terms.front();
  const Field& F = t.A->field();
  if (split.m.total() + split.p.total() != t.total())
    throw NotSplitSummand("witness pieces do not fill the end term");
  for (size_t v = 0; v < t.dim.size(); ++v) {
    int iv = static_cast<int>(v);
    if (!(mul(split.proj_m.comp[iv], split.incl_m.comp[iv]) ==
          Mat::identity(F, split.m.dim[iv])) ||
        !(mul(split.proj_p.comp[iv], split.incl_p.comp[iv]) ==
          Mat::identity(F, split.p.dim[iv])))
      throw NotSplitSummand("witness maps are not a splitting");
  }
  if (!split.p.is_zero_rep() && !is_projective(split.p))
    throw NotSplitSummand("designated summand is not projective");

  const size_t n = chain.maps.size();
  const Morphism& f = chain.maps[0];  // M_0 -> T

  // section s: P -> M_0 with f . s = incl_p
  auto s = factor_through_epi(split.incl_p, f);
  if (!s) throw NotSplitSummand("projective summand does not lift through the chain");

  ExactChain out;
  if (n == 1) {
    // 0 -> M_0 -> M (+) P -> 0 degenerates to 0 -> M_0' -> M -> 0
    auto fac = factor(compose(f, split.proj_p));
    Morphism map = compose(fac.kernel_incl, compose(f, split.proj_m));
    out.terms.push_back(split.m);
    out.terms.push_back(fac.kernel);
    out.maps.push_back(map);
    return out;
  }

  // terms become [M, M_0, M_1 (+) P, M_2, ..., M_n]
  SumDecomp sd = direct_sum(t.A, {chain.terms[2], split.p});  // M_1 (+) P
  Morphism new_d1 = add_morphisms(compose(sd.project[0], chain.maps[1]),
                                  compose(sd.project[1], *s));
  out.terms.push_back(split.m);
  out.terms.push_back(chain.terms[1]);
  out.terms.push_back(sd.sum);
  for (size_t i = 3; i <= n; ++i) out.terms.push_back(chain.terms[i]);
  out.maps.push_back(compose(f, split.proj_m));
  out.maps.push_back(new_d1);
  if (n >= 3) out.maps.push_back(compose(chain.maps[2], sd.inject[0]));
  for (size_t i = 3; i < n; ++i) out.maps.push_back(chain.maps[i]);
  return out;
}

SyzygyCatalog syzygy_scan(const AlgebraPtr& a, const std::vector<Rep>& seeds,
                          int depth, const ScanOptions& opts) {
  SyzygyCatalog cat;
  auto classes_of = [&](const std::vector<Rep>& mods) {
    std::vector<Rep> classes;
    for (const Rep& m : mods) {
      if (m.total() > opts.dim_cap)
        throw CapExceeded("syzygy scan hit the dimension cap");
      auto dec = decompose(m, opts.dec);
      for (const auto& p : dec.parts) {
        if (is_projective(p.part)) continue;
        bool seen = false;
        for (const auto& c : classes)
          if (indec_isomorphic(c, p.part)) {
            seen = true;
            break;
          }
        if (!seen) classes.push_back(p.part);
        if (static_cast<int>(classes.size()) > opts.class_cap)
          throw CapExceeded("syzygy scan hit the class cap");
      }
    }
    return classes;
  };

  cat.per_depth.push_back(classes_of(seeds));
  for (int d = 1; d <= depth; ++d) {
    std::vector<Rep> next;
    for (const Rep& m : cat.per_depth[d - 1]) next.push_back(syzygy(m, 1));
    cat.per_depth.push_back(classes_of(next));
  }

  // Stabilization: least n >= 1 with catalog(n+1) inside catalog(n).  A
  // semisimple algebra is rigorously 0-syzygy-finite, so it reports 0.
  if (a->loewy_length() == 1) {
    cat.stabilized_at = 0;
    return cat;
  }
  for (int nn = 1; nn + 1 <= depth; ++nn) {
    bool contained = true;
    for (const Rep& x : cat.per_depth[nn + 1]) {
      bool found = false;
      for (const Rep& y : cat.per_depth[nn])
        if (indec_isomorphic(x, y)) {
          found = true;
          break;
        }
      if (!found) {
        contained = false;
        break;
      }
    }
    if (contained) {
      cat.stabilized_at = nn;
      break;
    }
  }
  return cat;
}

}  // namespace qhom
