#include "qhom/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>

#include "qhom/polyfp.hpp"

namespace qhom {

namespace {

// --- endomorphism algebra in coordinates -------------------------------

struct EndoAlgebra {
  const Field F;
  std::vector<Morphism> basis;
  int d;                    // dim End
  Mat coord_cols;           // L x d stacked basis columns
  std::vector<Mat> struct_const;  // d matrices: coords of b_i b_j in column j

  explicit EndoAlgebra(const Rep& m, std::vector<Morphism> b)
      : F(m.A->field()), basis(std::move(b)), d(static_cast<int>(basis.size())) {
    int L = 0;
    for (int v : m.dim) L += v * v;
    coord_cols = Mat(F, L, d);
    for (int k = 0; k < d; ++k) stack_into(basis[k], coord_cols, k);
    // structure constants: column j of struct_const[i] = coords(b_i . b_j)
    // where composition means "apply b_j, then b_i"
    if (d > 0) {
      Mat prods(F, L, d * d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Morphism p = compose(basis[j], basis[i]);
          stack_into(p, prods, i * d + j);
        }
      auto x = solve(coord_cols, prods);
      assert(x);
      for (int i = 0; i < d; ++i) {
        Mat s(F, d, d);
        for (int r = 0; r < d; ++r)
          for (int j = 0; j < d; ++j) s.at(r, j) = x->at(r, i * d + j);
        struct_const.push_back(std::move(s));
      }
    }
  }

  static void stack_into(const Morphism& f, Mat& target, int col) {
    int off = 0;
    for (const auto& comp : f.comp) {
      for (int i = 0; i < comp.rows(); ++i)
        for (int j = 0; j < comp.cols(); ++j)
          target.at(off + j * comp.rows() + i, col) = comp.at(i, j);
      off += comp.rows() * comp.cols();
    }
  }

  std::vector<Scalar> coords_of(const Morphism& f) const {
    Mat col(F, coord_cols.rows(), 1);
    int off = 0;
    for (const auto& comp : f.comp) {
      for (int i = 0; i < comp.rows(); ++i)
        for (int j = 0; j < comp.cols(); ++j)
          col.at(off + j * comp.rows() + i, 0) = comp.at(i, j);
      off += comp.rows() * comp.cols();
    }
    auto x = solve(coord_cols, col);
    assert(x);
    std::vector<Scalar> out(d);
    for (int i = 0; i < d; ++i) out[i] = x->at(i, 0);
    return out;
  }

  Morphism from_coords(const std::vector<Scalar>& c) const {
    Morphism f = scale_morphism(basis[0], c[0]);
    for (int i = 1; i < d; ++i)
      f = add_morphisms(f, scale_morphism(basis[i], c[i]));
    return f;
  }

  std::vector<Scalar> mult(const std::vector<Scalar>& x,
                           const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(d, F.zero());
    for (int i = 0; i < d; ++i) {
      if (F.is_zero(x[i])) continue;
      for (int r = 0; r < d; ++r) {
        Scalar acc = F.zero();
        for (int j = 0; j < d; ++j)
          acc = F.add(acc, F.mul(struct_const[i].at(r, j), y[j]));
        out[r] = F.add(out[r], F.mul(x[i], acc));
      }
    }
    return out;
  }

  // minimal polynomial of the element with the given coordinates, computed
  // from the linear dependence of its powers inside End
  Poly min_poly(const std::vector<Scalar>& x, const std::vector<Scalar>& id) const {
    Mat cols(F, d, 1);
    for (int i = 0; i < d; ++i) cols.at(i, 0) = id[i];
    std::vector<Scalar> cur = id;
    for (int k = 1; k <= d + 1; ++k) {
      cur = mult(cur, x);
      Mat rhs(F, d, 1);
      for (int i = 0; i < d; ++i) rhs.at(i, 0) = cur[i];
      auto sol = solve(cols, rhs);
      if (sol) {
        Poly m(static_cast<size_t>(k) + 1, F.zero());
        m[k] = F.one();
        for (int i = 0; i < k; ++i) m[i] = F.neg(sol->at(i, 0));
        return m;
      }
      cols = hstack(cols, rhs);
    }
    assert(false && "minimal polynomial must exist within dim End");
    return {};
  }
};

Morphism apply_poly(const Rep& m, const Morphism& phi, const Poly& f) {
  Morphism acc = zero_morphism(m, m);
  for (size_t k = f.size(); k-- > 0;) {
    acc = compose(phi, acc);  // acc := acc . phi
    Morphism c = scale_morphism(identity_morphism(m), f[k]);
    acc = add_morphisms(acc, c);
  }
  return acc;
}

// vertexwise kernel of psi^(2^k) once ranks stabilize
std::vector<Mat> stable_kernel(const Rep& m, Morphism psi) {
  int prev = -1;
  for (int iter = 0; iter < 64; ++iter) {
    int total = 0;
    std::vector<Mat> kb(m.dim.size());
    for (size_t v = 0; v < m.dim.size(); ++v) {
      kb[v] = kernel_basis(psi.comp[v]);
      total += kb[v].cols();
    }
    if (total == prev) return kb;
    prev = total;
    psi = compose(psi, psi);
  }
  assert(false && "Fitting iteration did not stabilize");
  return {};
}

// --- radical of the endomorphism algebra (prime field) -----------------

// Friedl-Ronyai chain: M_0 = A, M_{j+1} = { x in M_j : tr((x y)^{p^j}) = 0
// for all y in M_j }, intersected until p^j exceeds the faithful degree.
std::vector<std::vector<Scalar>> radical_coords(const EndoAlgebra& E, const Rep& m) {
  const Field& F = E.F;
  const std::uint32_t p = F.characteristic();
  const int n = m.total();
  // current basis of M_j in End coordinates
  std::vector<std::vector<Scalar>> cur;
  for (int i = 0; i < E.d; ++i) {
    std::vector<Scalar> e(E.d, F.zero());
    e[i] = F.one();
    cur.push_back(e);
  }
  auto big_matrix = [&](const std::vector<Scalar>& coords) {
    Morphism f = E.from_coords(coords);
    Mat big(F, n, n);
    int off = 0;
    for (const auto& comp : f.comp) {
      for (int i = 0; i < comp.rows(); ++i)
        for (int j = 0; j < comp.cols(); ++j) big.at(off + i, off + j) = comp.at(i, j);
      off += comp.rows();
    }
    return big;
  };
  auto mat_pow = [&](Mat b, unsigned long long e) {
    Mat r = Mat::identity(F, b.rows());
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  };
  auto trace = [&](const Mat& b) {
    Scalar t = F.zero();
    for (int i = 0; i < b.rows(); ++i) t = F.add(t, b.at(i, i));
    return t;
  };

  unsigned long long pj = 1;
  for (int j = 0;; ++j) {
    if (cur.empty()) break;
    const int k = static_cast<int>(cur.size());
    std::vector<Mat> bigs;
    for (const auto& c : cur) bigs.push_back(big_matrix(c));
    Mat constraints(F, k, k);
    for (int t = 0; t < k; ++t)
      for (int s = 0; s < k; ++s)
        constraints.at(t, s) = trace(mat_pow(mul(bigs[s], bigs[t]), pj));
    Mat ker = kernel_basis(constraints);
    std::vector<std::vector<Scalar>> next;
    for (int c = 0; c < ker.cols(); ++c) {
      std::vector<Scalar> v(E.d, F.zero());
      for (int s = 0; s < k; ++s) {
        if (F.is_zero(ker.at(s, c))) continue;
        for (int i = 0; i < E.d; ++i)
          v[i] = F.add(v[i], F.mul(ker.at(s, c), cur[s][i]));
      }
      next.push_back(std::move(v));
    }
    cur = std::move(next);
    if (pj >= static_cast<unsigned long long>(n)) break;
    pj *= p;
  }
  return cur;
}

// Is End/rad a finite field?  Requires the radical in End coordinates.
bool quotient_is_field(const EndoAlgebra& E,
                       const std::vector<std::vector<Scalar>>& rad,
                       const std::vector<Scalar>& id_coords) {
  const Field& F = E.F;
  const int d = E.d;
  const int r = static_cast<int>(rad.size());
  const int q = d - r;
  if (q == 0) return false;  // cannot happen: identity is not in rad
  // complement coordinates for the quotient
  Mat radmat(F, d, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < d; ++i) radmat.at(i, j) = rad[j][i];
  Mat radbasis = column_space_basis(radmat);
  Mat t = transpose(radbasis);
  std::vector<int> piv = rref_in_place(t);
  std::vector<bool> is_piv(d, false);
  for (int c : piv) is_piv[c] = true;
  Mat ext(F, d, d);
  for (int j = 0; j < radbasis.cols(); ++j)
    for (int i = 0; i < d; ++i) ext.at(i, j) = radbasis.at(i, j);
  std::vector<int> comp_coord;
  int col = radbasis.cols();
  for (int i = 0; i < d; ++i)
    if (!is_piv[i]) {
      ext.at(i, col++) = F.one();
      comp_coord.push_back(i);
    }
  auto inv = inverse(ext);
  assert(inv);
  auto to_q = [&](const std::vector<Scalar>& x) {
    std::vector<Scalar> out(q, F.zero());
    for (int i = 0; i < q; ++i) {
      Scalar acc = F.zero();
      for (int j = 0; j < d; ++j) acc = F.add(acc, F.mul(inv->at(r + i, j), x[j]));
      out[i] = acc;
    }
    return out;
  };
  // representatives of the quotient basis inside End
  std::vector<std::vector<Scalar>> reps(q, std::vector<Scalar>(d, F.zero()));
  for (int i = 0; i < q; ++i) reps[i][comp_coord[i]] = F.one();

  // commutativity modulo rad
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      auto ab = E.mult(reps[i], reps[j]);
      auto ba = E.mult(reps[j], reps[i]);
      auto diff = to_q([&] {
        std::vector<Scalar> v(d);
        for (int k2 = 0; k2 < d; ++k2) v[k2] = F.sub(ab[k2], ba[k2]);
        return v;
      }());
      for (const auto& s : diff)
        if (!F.is_zero(s)) return false;
    }

  // Frobenius fixed subalgebra of the (commutative) quotient must equal F_p
  const std::uint32_t p = F.characteristic();
  auto pow_in_end = [&](std::vector<Scalar> base, unsigned long long e) {
    std::vector<Scalar> acc = id_coords;
    while (e) {
      if (e & 1) acc = E.mult(acc, base);
      base = E.mult(base, base);
      e >>= 1;
    }
    return acc;
  };
  Mat frob(F, q, q);
  for (int j = 0; j < q; ++j) {
    auto fp = to_q(pow_in_end(reps[j], p));
    for (int i = 0; i < q; ++i) frob.at(i, j) = fp[i];
  }
  Mat fixed = kernel_basis(sub(frob, Mat::identity(F, q)));
  return fixed.cols() == 1;
}

// --- splitting ----------------------------------------------------------

struct SplitOutcome {
  bool split = false;
  std::vector<SubWithInclusion> components;
};

SplitOutcome try_split_with(const Rep& m, const EndoAlgebra& E,
                            const std::vector<Scalar>& coords,
                            const std::vector<Scalar>& id_coords,
                            std::uint64_t seed) {
  const Field& F = m.A->field();
  Poly mp = E.min_poly(coords, id_coords);
  auto factors = poly_distinct_irreducible_factors(F, mp, seed);
  if (factors.size() < 2) return {};
  Morphism phi = E.from_coords(coords);
  SplitOutcome out;
  out.split = true;
  int covered = 0;
  for (const auto& f : factors) {
    Morphism psi = apply_poly(m, phi, f);
    auto kb = stable_kernel(m, psi);
    auto sub = sub_from_subspaces(m, kb);
    covered += sub.sub.total();
    out.components.push_back(std::move(sub));
  }
  assert(covered == m.total() && "primary components must exhaust the module");
  return out;
}

struct Piece {
  Rep part;
  Morphism incl;
  LocalCertificate cert;
};

void split_recursive(const Rep& m, const Morphism& incl, const DecomposeOptions& opts,
                     SplitRng& rng, std::vector<Piece>& out) {
  if (m.is_zero_rep()) return;
  const Field& F = m.A->field();
  const std::uint32_t p = F.characteristic();
  EndoAlgebra E(m, hom_basis(m, m));
  if (E.d == 1) {
    out.push_back({m, incl, LocalCertificate::EndDimOne});
    return;
  }
  auto id_coords = E.coords_of(identity_morphism(m));

  auto attempt = [&](const std::vector<Scalar>& coords) -> bool {
    auto o = try_split_with(m, E, coords, id_coords, opts.seed);
    if (!o.split) return false;
    for (auto& c : o.components)
      split_recursive(c.sub, compose(c.incl, incl), opts, rng, out);
    return true;
  };

  // 1. basis elements
  for (int i = 0; i < E.d; ++i) {
    std::vector<Scalar> c(E.d, F.zero());
    c[i] = F.one();
    if (attempt(c)) return;
  }
  // 2. pairwise sums
  int pair_budget = 300;
  for (int i = 0; i < E.d && pair_budget > 0; ++i)
    for (int j = i + 1; j < E.d && pair_budget > 0; ++j) {
      --pair_budget;
      std::vector<Scalar> c(E.d, F.zero());
      c[i] = F.one();
      c[j] = F.one();
      if (attempt(c)) return;
    }
  // 3. seeded random combinations
  for (int t = 0; t < opts.random_tries; ++t) {
    std::vector<Scalar> c(E.d);
    bool nz = false;
    for (int i = 0; i < E.d; ++i) {
      c[i] = F.of_int(static_cast<long long>(rng.below(p)));
      nz = nz || !F.is_zero(c[i]);
    }
    if (nz && attempt(c)) return;
  }
  // 4. exhaustive enumeration when the budget allows; complete, so failure
  // to split certifies indecomposability
  double logsize = E.d * std::log2(static_cast<double>(p));
  if (logsize <= std::log2(static_cast<double>(opts.exhaustive_budget))) {
    long long count = 1;
    for (int i = 0; i < E.d; ++i) count *= p;
    for (long long code = 1; code < count; ++code) {
      long long c2 = code;
      std::vector<Scalar> c(E.d);
      for (int i = 0; i < E.d; ++i) {
        c[i] = F.of_int(c2 % p);
        c2 /= p;
      }
      if (attempt(c)) return;
    }
    out.push_back({m, incl, LocalCertificate::ExhaustiveSearch});
    return;
  }
  // 5. radical of End
  auto rad = radical_coords(E, m);
  if (quotient_is_field(E, rad, id_coords)) {
    out.push_back({m, incl, LocalCertificate::RadicalQuotientField});
    return;
  }
  // End is provably non-local: keep drawing until a split shows up
  for (int t = 0; t < opts.recovery_tries; ++t) {
    std::vector<Scalar> c(E.d);
    bool nz = false;
    for (int i = 0; i < E.d; ++i) {
      c[i] = F.of_int(static_cast<long long>(rng.below(p)));
      nz = nz || !F.is_zero(c[i]);
    }
    if (nz && attempt(c)) return;
  }
  throw Undecided("endomorphism algebra is not local but no splitting was "
                  "found within the search budget");
}

}  // namespace

bool indec_isomorphic(const Rep& a, const Rep& b) {
  if (a.A.get() != b.A.get())
    throw AlgebraMismatch("isomorphism test across algebras");
  if (a.dim != b.dim) return false;
  // for indecomposables the non-isomorphisms form a proper subspace of Hom,
  // so if the modules are isomorphic some basis element is invertible
  for (const auto& f : hom_basis(a, b))
    if (morphism_is_iso(f)) return true;
  return false;
}

DecompositionResult decompose(const Rep& m, const DecomposeOptions& opts) {
  if (m.A->field().is_rational())
    throw RationalFieldUnsupported("decomposition requires a prime field");
  if (m.total() > opts.dim_cap)
    throw Undecided("module dimension exceeds the decomposition cap of " +
                    std::to_string(opts.dim_cap));
  SplitRng rng(opts.seed * 0x9e3779b97f4a7c15ULL + 0x1234567);
  std::vector<Piece> pieces;
  split_recursive(m, identity_morphism(m), opts, rng, pieces);

  DecompositionResult res;
  std::vector<int> order(pieces.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (pieces[x].part.total() != pieces[y].part.total())
      return pieces[x].part.total() < pieces[y].part.total();
    return pieces[x].part.dim < pieces[y].part.dim;
  });

  std::vector<int> assigned(pieces.size(), -1);
  for (size_t oi = 0; oi < order.size(); ++oi) {
    int i = order[oi];
    if (assigned[i] >= 0) continue;
    int cls = static_cast<int>(res.parts.size());
    assigned[i] = cls;
    res.parts.push_back({pieces[i].part, 1, pieces[i].cert});
    res.copy_inclusions.push_back(pieces[i].incl);
    for (size_t oj = oi + 1; oj < order.size(); ++oj) {
      int j = order[oj];
      if (assigned[j] >= 0) continue;
      if (indec_isomorphic(pieces[i].part, pieces[j].part)) {
        assigned[j] = cls;
        res.parts[cls].multiplicity++;
        res.copy_inclusions.push_back(pieces[j].incl);
      }
    }
  }
  // reorder inclusions to match flattened part order
  {
    std::vector<Morphism> flat;
    for (size_t cls = 0; cls < res.parts.size(); ++cls) {
      for (size_t oi = 0; oi < order.size(); ++oi) {
        int i = order[oi];
        if (assigned[i] == static_cast<int>(cls)) flat.push_back(pieces[i].incl);
      }
    }
    res.copy_inclusions = std::move(flat);
  }

  // assemble the witness (+) parts -> m and check it is an isomorphism
  std::vector<Rep> flat_parts;
  for (const auto& p : res.parts)
    for (int k = 0; k < p.multiplicity; ++k) flat_parts.push_back(p.part);
  if (flat_parts.empty()) {
    res.witness = identity_morphism(m);  // m is zero
    return res;
  }
  SumDecomp sd = direct_sum(m.A, flat_parts);
  Morphism w = zero_morphism(sd.sum, m);
  for (size_t k = 0; k < flat_parts.size(); ++k)
    w = add_morphisms(w, compose(sd.project[k], res.copy_inclusions[k]));
  assert(morphism_is_iso(w));
  res.witness = std::move(w);
  return res;
}

bool is_isomorphic(const Rep& a, const Rep& b, const DecomposeOptions& opts) {
  if (a.A.get() != b.A.get())
    throw AlgebraMismatch("isomorphism test across algebras");
  if (a.dim != b.dim) return false;
  if (a.total() == 0) return true;
  // a direct invertible morphism is sound over any field
  for (const auto& f : hom_basis(a, b))
    if (morphism_is_iso(f)) return true;
  if (a.A->field().is_rational())
    throw RationalFieldUnsupported(
        "cannot certify non-isomorphism over the rationals");
  auto da = decompose(a, opts);
  auto db = decompose(b, opts);
  if (da.parts.size() != db.parts.size()) return false;
  std::vector<bool> used(db.parts.size(), false);
  for (const auto& pa : da.parts) {
    bool found = false;
    for (size_t j = 0; j < db.parts.size() && !found; ++j) {
      if (used[j] || db.parts[j].multiplicity != pa.multiplicity) continue;
      if (indec_isomorphic(pa.part, db.parts[j].part)) {
        used[j] = true;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool add_membership(const Rep& m, const Rep& t, const DecomposeOptions& opts) {
  if (m.A.get() != t.A.get())
    throw AlgebraMismatch("add-membership across algebras");
  if (m.total() == 0) return true;
  auto dm = decompose(m, opts);
  auto dt = decompose(t, opts);
  for (const auto& pm : dm.parts) {
    bool found = false;
    for (const auto& pt : dt.parts)
      if (indec_isomorphic(pm.part, pt.part)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool end_is_local(const Rep& m, const DecomposeOptions& opts) {
  if (m.is_zero_rep()) return false;
  auto d = decompose(m, opts);
  return d.parts.size() == 1 && d.parts[0].multiplicity == 1;
}

}  // namespace qhom
