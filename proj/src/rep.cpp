#include "qhom/rep.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace qhom {

namespace {
void check_same_algebra(const Rep& a, const Rep& b) {
  if (a.A.get() != b.A.get())
    throw AlgebraMismatch("representations live over different algebras");
}
}  // namespace

int Rep::total() const { return std::accumulate(dim.begin(), dim.end(), 0); }

bool Rep::is_zero_rep() const { return total() == 0; }

Rep zero_rep(const AlgebraPtr& a) {
  Rep m;
  m.A = a;
  m.dim.assign(a->quiver().n_vertices(), 0);
  for (int i = 0; i < a->quiver().n_arrows(); ++i)
    m.act.push_back(Mat(a->field(), 0, 0));
  return m;
}

Rep make_rep(const AlgebraPtr& a, std::vector<int> dim, std::vector<Mat> act) {
  Rep m;
  m.A = a;
  m.dim = std::move(dim);
  m.act = std::move(act);
  validate_rep(m);
  return m;
}

std::vector<std::vector<int>> projective_basis_paths(const AlgebraPtr& a, int vertex) {
  std::vector<std::vector<int>> local(a->quiver().n_vertices());
  for (int g : a->basis_with_source(vertex))
    local[a->basis_element(g).tgt].push_back(g);
  return local;
}

Rep standard_module(const AlgebraPtr& a, StandardKind kind, int vertex) {
  const Quiver& q = a->quiver();
  if (vertex < 0 || vertex >= q.n_vertices())
    throw UnknownVertex("no vertex with index " + std::to_string(vertex));
  const Field& F = a->field();
  if (kind == StandardKind::Simple) {
    Rep m = zero_rep(a);
    m.dim[vertex] = 1;
    for (int ar = 0; ar < q.n_arrows(); ++ar)
      m.act[ar] = Mat(F, m.dim[q.arrow(ar).tgt], m.dim[q.arrow(ar).src]);
    return m;
  }
  if (kind == StandardKind::Injective) {
    Rep pop = standard_module(a->opposite(), StandardKind::Projective, vertex);
    return dual_to(pop, a);
  }
  // Projective P(vertex): basis paths with the given source, acting by right
  // multiplication.
  std::vector<std::vector<int>> local = projective_basis_paths(a, vertex);
  std::vector<int> local_of(a->dimension(), -1);
  for (int v = 0; v < q.n_vertices(); ++v)
    for (size_t j = 0; j < local[v].size(); ++j)
      local_of[local[v][j]] = static_cast<int>(j);
  Rep m;
  m.A = a;
  m.dim.resize(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) m.dim[v] = static_cast<int>(local[v].size());
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    int u = q.arrow(ar).src, w = q.arrow(ar).tgt;
    Mat mat(F, m.dim[w], m.dim[u]);
    for (int j = 0; j < m.dim[u]; ++j) {
      for (const auto& [g, c] : a->mult_by_arrow(local[u][j], ar)) {
        assert(local_of[g] >= 0);
        mat.at(local_of[g], j) = c;
      }
    }
    m.act.push_back(std::move(mat));
  }
  return m;
}

Rep regular_module(const AlgebraPtr& a) {
  std::vector<Rep> parts;
  for (int v = 0; v < a->quiver().n_vertices(); ++v)
    parts.push_back(standard_module(a, StandardKind::Projective, v));
  return direct_sum(a, parts).sum;
}

Mat path_action(const Rep& m, const PathWord& w) {
  auto [s, t] = path_endpoints(m.A->quiver(), w);
  Mat acc = Mat::identity(m.A->field(), m.dim[s]);
  for (int ar : w.arrows) acc = mul(m.act[ar], acc);
  assert(acc.rows() == m.dim[t]);
  return acc;
}

void validate_rep(const Rep& m) {
  const Quiver& q = m.A->quiver();
  if (static_cast<int>(m.dim.size()) != q.n_vertices() ||
      static_cast<int>(m.act.size()) != q.n_arrows())
    throw RelationViolation("representation has wrong shape");
  for (int ar = 0; ar < q.n_arrows(); ++ar)
    if (m.act[ar].rows() != m.dim[q.arrow(ar).tgt] ||
        m.act[ar].cols() != m.dim[q.arrow(ar).src])
      throw RelationViolation("arrow matrix shape mismatch at arrow " +
                              q.arrow(ar).name);
  const Field& F = m.A->field();
  for (const auto& rel : m.A->relations()) {
    auto [s, t] = path_endpoints(q, rel.front().path);
    Mat acc(F, m.dim[t], m.dim[s]);
    for (const auto& term : rel)
      acc = add(acc, scale(path_action(m, term.path), term.coeff));
    if (!acc.is_zero())
      throw RelationViolation("a relation acts nonzero on the representation");
  }
}

Morphism identity_morphism(const Rep& m) {
  Morphism f{m, m, {}};
  for (int d : m.dim) f.comp.push_back(Mat::identity(m.A->field(), d));
  return f;
}

Morphism zero_morphism(const Rep& src, const Rep& dst) {
  check_same_algebra(src, dst);
  Morphism f{src, dst, {}};
  for (size_t v = 0; v < src.dim.size(); ++v)
    f.comp.push_back(Mat(src.A->field(), dst.dim[v], src.dim[v]));
  return f;
}

Morphism compose(const Morphism& first, const Morphism& then) {
  Morphism f{first.src, then.dst, {}};
  for (size_t v = 0; v < first.comp.size(); ++v)
    f.comp.push_back(mul(then.comp[v], first.comp[v]));
  return f;
}

Morphism add_morphisms(const Morphism& f, const Morphism& g) {
  Morphism h{f.src, f.dst, {}};
  for (size_t v = 0; v < f.comp.size(); ++v) h.comp.push_back(add(f.comp[v], g.comp[v]));
  return h;
}

Morphism scale_morphism(const Morphism& f, const Scalar& c) {
  Morphism h{f.src, f.dst, {}};
  for (const auto& m : f.comp) h.comp.push_back(scale(m, c));
  return h;
}

bool is_valid_morphism(const Morphism& f) {
  const Quiver& q = f.src.A->quiver();
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    int u = q.arrow(ar).src, w = q.arrow(ar).tgt;
    if (!(mul(f.dst.act[ar], f.comp[u]) == mul(f.comp[w], f.src.act[ar])))
      return false;
  }
  return true;
}

bool morphism_is_zero(const Morphism& f) {
  for (const auto& m : f.comp)
    if (!m.is_zero()) return false;
  return true;
}

bool morphism_is_iso(const Morphism& f) {
  for (size_t v = 0; v < f.comp.size(); ++v) {
    if (f.src.dim[v] != f.dst.dim[v]) return false;
    if (rank(f.comp[v]) != f.src.dim[v]) return false;
  }
  return true;
}

std::vector<Morphism> hom_basis(const Rep& m, const Rep& n) {
  check_same_algebra(m, n);
  const Quiver& q = m.A->quiver();
  const Field& F = m.A->field();
  const int nv = q.n_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim[v] * m.dim[v];
  const int unknowns = off[nv];

  int total_rows = 0;
  for (int ar = 0; ar < q.n_arrows(); ++ar)
    total_rows += n.dim[q.arrow(ar).tgt] * m.dim[q.arrow(ar).src];
  Mat sys(F, total_rows, unknowns);
  int row = 0;
  // unknown F_v[r, c] sits at off[v] + c * n.dim[v] + r
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    int u = q.arrow(ar).src, w = q.arrow(ar).tgt;
    for (int i = 0; i < n.dim[w]; ++i) {
      for (int j = 0; j < m.dim[u]; ++j) {
        for (int r = 0; r < n.dim[u]; ++r) {
          const Scalar& c = n.act[ar].at(i, r);
          if (!F.is_zero(c))
            sys.at(row, off[u] + j * n.dim[u] + r) =
                F.add(sys.at(row, off[u] + j * n.dim[u] + r), c);
        }
        for (int c2 = 0; c2 < m.dim[w]; ++c2) {
          const Scalar& c = m.act[ar].at(c2, j);
          if (!F.is_zero(c))
            sys.at(row, off[w] + c2 * n.dim[w] + i) =
                F.sub(sys.at(row, off[w] + c2 * n.dim[w] + i), c);
        }
        ++row;
      }
    }
  }
  Mat ker = kernel_basis(sys);
  std::vector<Morphism> basis;
  for (int k = 0; k < ker.cols(); ++k) {
    Morphism f{m, n, {}};
    for (int v = 0; v < nv; ++v) {
      Mat comp(F, n.dim[v], m.dim[v]);
      for (int c = 0; c < m.dim[v]; ++c)
        for (int r = 0; r < n.dim[v]; ++r)
          comp.at(r, c) = ker.at(off[v] + c * n.dim[v] + r, k);
      f.comp.push_back(std::move(comp));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

SubWithInclusion sub_from_subspaces(const Rep& m, const std::vector<Mat>& bases) {
  const Quiver& q = m.A->quiver();
  Rep s;
  s.A = m.A;
  s.dim.resize(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) s.dim[v] = bases[v].cols();
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    int u = q.arrow(ar).src, w = q.arrow(ar).tgt;
    auto x = solve(bases[w], mul(m.act[ar], bases[u]));
    if (!x) throw std::logic_error("subspace tuple is not arrow-stable");
    s.act.push_back(std::move(*x));
  }
  Morphism incl{s, m, bases};
  return {std::move(s), std::move(incl)};
}

QuotWithProjection quotient_by_subspaces(const Rep& m, const std::vector<Mat>& bases) {
  const Quiver& q = m.A->quiver();
  const Field& F = m.A->field();
  std::vector<Mat> proj(q.n_vertices()), section(q.n_vertices());
  Rep quot;
  quot.A = m.A;
  quot.dim.resize(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) {
    Mat basis = column_space_basis(bases[v]);
    // complement coordinates: those that are not pivot rows of the canonical
    // column basis
    Mat t = transpose(basis);
    std::vector<int> piv = rref_in_place(t);
    std::vector<bool> is_piv(m.dim[v], false);
    for (int c : piv) is_piv[c] = true;
    int k = m.dim[v] - basis.cols();
    quot.dim[v] = k;
    Mat ext(F, m.dim[v], m.dim[v]);
    for (int j = 0; j < basis.cols(); ++j)
      for (int i = 0; i < m.dim[v]; ++i) ext.at(i, j) = basis.at(i, j);
    int col = basis.cols();
    Mat sec(F, m.dim[v], k);
    int sc = 0;
    for (int i = 0; i < m.dim[v]; ++i) {
      if (is_piv[i]) continue;
      ext.at(i, col) = F.one();
      sec.at(i, sc) = F.one();
      ++col;
      ++sc;
    }
    auto inv = inverse(ext);
    assert(inv);
    Mat p(F, k, m.dim[v]);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < m.dim[v]; ++j) p.at(i, j) = inv->at(basis.cols() + i, j);
    proj[v] = std::move(p);
    section[v] = std::move(sec);
  }
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    int u = q.arrow(ar).src, w = q.arrow(ar).tgt;
    quot.act.push_back(mul(proj[w], mul(m.act[ar], section[u])));
  }
  Morphism pr{m, quot, proj};
  return {std::move(quot), std::move(pr)};
}

SubWithInclusion kernel_of(const Morphism& f) {
  const Quiver& q = f.src.A->quiver();
  std::vector<Mat> kb(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) kb[v] = kernel_basis(f.comp[v]);
  return sub_from_subspaces(f.src, kb);
}

FactorResult factor(const Morphism& f) {
  const Quiver& q = f.src.A->quiver();
  std::vector<Mat> kb(q.n_vertices()), ib(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) {
    kb[v] = kernel_basis(f.comp[v]);
    ib[v] = column_space_basis(f.comp[v]);
  }
  auto ker = sub_from_subspaces(f.src, kb);
  auto img = sub_from_subspaces(f.dst, ib);
  auto cok = quotient_by_subspaces(f.dst, ib);
  return {std::move(ker.sub),  std::move(ker.incl), std::move(img.sub),
          std::move(img.incl), std::move(cok.quot), std::move(cok.proj)};
}

SubWithInclusion radical_submodule(const Rep& m) {
  const Quiver& q = m.A->quiver();
  const Field& F = m.A->field();
  std::vector<Mat> bases(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) {
    Mat acc(F, m.dim[v], 0);
    for (int ar = 0; ar < q.n_arrows(); ++ar)
      if (q.arrow(ar).tgt == v) acc = hstack(acc, m.act[ar]);
    bases[v] = column_space_basis(acc);
  }
  return sub_from_subspaces(m, bases);
}

SubWithInclusion socle_submodule(const Rep& m) {
  const Quiver& q = m.A->quiver();
  const Field& F = m.A->field();
  std::vector<Mat> bases(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) {
    Mat acc(F, 0, m.dim[v]);
    for (int ar = 0; ar < q.n_arrows(); ++ar)
      if (q.arrow(ar).src == v) acc = vstack(acc, m.act[ar]);
    bases[v] = kernel_basis(acc);
  }
  return sub_from_subspaces(m, bases);
}

QuotWithProjection top_quotient(const Rep& m) {
  auto rad = radical_submodule(m);
  return quotient_by_subspaces(m, rad.incl.comp);
}

std::vector<int> top_multiplicities(const Rep& m) {
  auto rad = radical_submodule(m);
  std::vector<int> mult(m.dim.size());
  for (size_t v = 0; v < m.dim.size(); ++v) mult[v] = m.dim[v] - rad.sub.dim[v];
  return mult;
}

RadicalSeries radical_series(const Rep& m) {
  RadicalSeries rs;
  rs.terms.push_back(m);
  while (!rs.terms.back().is_zero_rep()) {
    auto rad = radical_submodule(rs.terms.back());
    std::vector<int> layer(m.dim.size());
    for (size_t v = 0; v < m.dim.size(); ++v)
      layer[v] = rs.terms.back().dim[v] - rad.sub.dim[v];
    rs.layer_mults.push_back(std::move(layer));
    rs.inclusions.push_back(rad.incl);
    rs.terms.push_back(rad.sub);
  }
  return rs;
}

int module_loewy_length(const Rep& m) {
  return static_cast<int>(radical_series(m).terms.size()) - 1;
}

SumDecomp direct_sum(const AlgebraPtr& a, const std::vector<Rep>& parts) {
  const Quiver& q = a->quiver();
  const Field& F = a->field();
  SumDecomp out;
  Rep sum = zero_rep(a);
  std::vector<std::vector<int>> offsets(parts.size(),
                                        std::vector<int>(q.n_vertices(), 0));
  for (size_t p = 0; p < parts.size(); ++p) {
    check_same_algebra(parts[p], sum);
    for (int v = 0; v < q.n_vertices(); ++v) {
      offsets[p][v] = sum.dim[v];
      sum.dim[v] += parts[p].dim[v];
    }
  }
  for (int ar = 0; ar < q.n_arrows(); ++ar) {
    int u = q.arrow(ar).src, w = q.arrow(ar).tgt;
    Mat mat(F, sum.dim[w], sum.dim[u]);
    for (size_t p = 0; p < parts.size(); ++p)
      for (int i = 0; i < parts[p].dim[w]; ++i)
        for (int j = 0; j < parts[p].dim[u]; ++j)
          mat.at(offsets[p][w] + i, offsets[p][u] + j) = parts[p].act[ar].at(i, j);
    sum.act[ar] = std::move(mat);
  }
  out.sum = sum;
  for (size_t p = 0; p < parts.size(); ++p) {
    Morphism in{parts[p], sum, {}}, pr{sum, parts[p], {}};
    for (int v = 0; v < q.n_vertices(); ++v) {
      Mat mi(F, sum.dim[v], parts[p].dim[v]);
      Mat mp(F, parts[p].dim[v], sum.dim[v]);
      for (int i = 0; i < parts[p].dim[v]; ++i) {
        mi.at(offsets[p][v] + i, i) = F.one();
        mp.at(i, offsets[p][v] + i) = F.one();
      }
      in.comp.push_back(std::move(mi));
      pr.comp.push_back(std::move(mp));
    }
    out.inject.push_back(std::move(in));
    out.project.push_back(std::move(pr));
  }
  return out;
}

Rep dual_to(const Rep& m, const AlgebraPtr& target) {
  const Quiver& qs = m.A->quiver();
  const Quiver& qt = target->quiver();
  if (qs.n_vertices() != qt.n_vertices() || qs.n_arrows() != qt.n_arrows())
    throw AlgebraMismatch("dual_to target is not the structural opposite");
  Rep d;
  d.A = target;
  d.dim = m.dim;
  for (int ar = 0; ar < qt.n_arrows(); ++ar) d.act.push_back(transpose(m.act[ar]));
  return d;
}

bool is_projective(const Rep& m) {
  std::vector<int> top = top_multiplicities(m);
  int cover_dim = 0;
  for (size_t v = 0; v < top.size(); ++v)
    if (top[v] > 0)
      cover_dim += top[v] * static_cast<int>(m.A->basis_with_source(
                                                   static_cast<int>(v))
                                                 .size());
  return cover_dim == m.total();
}

std::vector<Mat> arrow_stable_closure(const Rep& m, std::vector<Mat> seed) {
  const Quiver& q = m.A->quiver();
  for (size_t v = 0; v < seed.size(); ++v) seed[v] = column_space_basis(seed[v]);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ar = 0; ar < q.n_arrows(); ++ar) {
      int u = q.arrow(ar).src, w = q.arrow(ar).tgt;
      Mat grown = column_space_basis(hstack(seed[w], mul(m.act[ar], seed[u])));
      if (grown.cols() != seed[w].cols()) {
        seed[w] = std::move(grown);
        changed = true;
      }
    }
  }
  return seed;
}

std::optional<Morphism> factor_through_epi(const Morphism& target,
                                           const Morphism& epi) {
  const Field& F = target.src.A->field();
  std::vector<Morphism> homs = hom_basis(target.src, epi.src);
  if (homs.empty()) {
    if (morphism_is_zero(target)) return zero_morphism(target.src, epi.src);
    return std::nullopt;
  }
  // solve sum_i  lambda_i (epi . h_i) = target  in vectorized form
  int L = 0;
  for (const auto& c : target.comp) L += c.rows() * c.cols();
  Mat sys(F, L, static_cast<int>(homs.size()));
  Mat rhs(F, L, 1);
  for (size_t k = 0; k < homs.size(); ++k) {
    Morphism e = compose(homs[k], epi);
    int off = 0;
    for (size_t v = 0; v < e.comp.size(); ++v) {
      const Mat& c = e.comp[v];
      for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
          sys.at(off + i * c.cols() + j, static_cast<int>(k)) = c.at(i, j);
      off += c.rows() * c.cols();
    }
  }
  int off = 0;
  for (size_t v = 0; v < target.comp.size(); ++v) {
    const Mat& c = target.comp[v];
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) rhs.at(off + i * c.cols() + j, 0) = c.at(i, j);
    off += c.rows() * c.cols();
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  Morphism h = zero_morphism(target.src, epi.src);
  for (size_t k = 0; k < homs.size(); ++k)
    h = add_morphisms(h, scale_morphism(homs[k], sol->at(static_cast<int>(k), 0)));
  return h;
}

}  // namespace qhom
