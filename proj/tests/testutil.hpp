#ifndef QHOM_TESTUTIL_HPP
#define QHOM_TESTUTIL_HPP

#include <string>
#include <vector>

#include "qhom/bounds.hpp"
#include "qhom/decompose.hpp"
#include "qhom/polyfp.hpp"
#include "qhom/rep.hpp"
#include "qhom/resolution.hpp"

namespace qhom::testutil {

inline PathWord pw(const Quiver& q, std::initializer_list<const char*> arrows) {
  PathWord w;
  std::vector<int> ids;
  for (const char* a : arrows) ids.push_back(q.arrow_id(a));
  w.arrows = ids;
  w.vertex = ids.empty() ? -1 : q.arrow(ids.front()).src;
  return w;
}

inline Relation monomial_rel(const Quiver& q, const Field& f,
                             std::initializer_list<const char*> arrows) {
  return Relation{{f.one(), pw(q, arrows)}};
}

inline Relation comm_rel(const Quiver& q, const Field& f,
                         std::initializer_list<const char*> a,
                         std::initializer_list<const char*> b) {
  return Relation{{f.one(), pw(q, a)}, {f.neg(f.one()), pw(q, b)}};
}

inline AlgebraPtr make_semisimple2(std::uint32_t p = 2) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  return build_algebra(q, {}, Field::prime(p), 4);
}

inline AlgebraPtr make_a2(std::uint32_t p = 2) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  return build_algebra(q, {}, Field::prime(p), 4);
}

inline AlgebraPtr make_a5(std::uint32_t p = 2) {
  Quiver q;
  for (int i = 1; i <= 5; ++i) q.add_vertex(std::to_string(i));
  for (int i = 1; i <= 4; ++i)
    q.add_arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  return build_algebra(q, {}, Field::prime(p), 8);
}

inline AlgebraPtr make_kronecker(std::uint32_t p = 2) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "1", "2");
  return build_algebra(q, {}, Field::prime(p), 4);
}

inline AlgebraPtr make_loop(int n, std::uint32_t p = 2) {
  Quiver q;
  q.add_vertex("1");
  q.add_arrow("x", "1", "1");
  Field f = Field::prime(p);
  std::vector<const char*> word(n, "x");
  Relation r;
  PathWord w;
  w.vertex = 0;
  w.arrows.assign(n, 0);
  r.push_back({f.one(), w});
  return build_algebra(q, {r}, f, n + 1);
}

inline AlgebraPtr make_exterior(int n, std::uint32_t p = 3) {
  Quiver q;
  q.add_vertex("1");
  for (int i = 0; i < n; ++i) q.add_arrow("x" + std::to_string(i + 1), "1", "1");
  Field f = Field::prime(p);
  std::vector<Relation> rels;
  for (int i = 0; i < n; ++i) {
    PathWord w;
    w.vertex = 0;
    w.arrows = {i, i};
    rels.push_back({{f.one(), w}});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      PathWord xy, yx;
      xy.vertex = yx.vertex = 0;
      xy.arrows = {i, j};
      yx.arrows = {j, i};
      rels.push_back({{f.one(), xy}, {f.one(), yx}});
    }
  return build_algebra(q, rels, f, n + 2);
}

inline AlgebraPtr make_beilinson2(std::uint32_t p = 2) {
  Quiver q;
  q.add_vertex("0");
  q.add_vertex("1");
  q.add_vertex("2");
  for (int lvl = 0; lvl < 2; ++lvl)
    for (int i = 0; i < 3; ++i)
      q.add_arrow("x" + std::to_string(i) + "_" + std::to_string(lvl),
                  std::to_string(lvl), std::to_string(lvl + 1));
  Field f = Field::prime(p);
  std::vector<Relation> rels;
  auto arrow = [&](int i, int lvl) {
    return "x" + std::to_string(i) + "_" + std::to_string(lvl);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      PathWord ij, ji;
      ij.vertex = ji.vertex = 0;
      ij.arrows = {q.arrow_id(arrow(i, 0)), q.arrow_id(arrow(j, 1))};
      ji.arrows = {q.arrow_id(arrow(j, 0)), q.arrow_id(arrow(i, 1))};
      rels.push_back({{f.one(), ij}, {f.neg(f.one()), ji}});
    }
  return build_algebra(q, rels, f, 6);
}

inline AlgebraPtr make_monomial_abc(std::uint32_t p = 2) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "3");
  Field f = Field::prime(p);
  return build_algebra(q, {monomial_rel(q, f, {"a", "b"})}, f, 4);
}

inline AlgebraPtr make_radsquare(std::uint32_t p = 2) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "1");
  Field f = Field::prime(p);
  return build_algebra(
      q, {monomial_rel(q, f, {"a", "b"}), monomial_rel(q, f, {"b", "a"})}, f, 4);
}

inline AlgebraPtr make_t2_loop4(std::uint32_t p = 3) {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("x1", "1", "1");
  q.add_arrow("x2", "2", "2");
  q.add_arrow("b", "1", "2");
  Field f = Field::prime(p);
  std::vector<Relation> rels;
  rels.push_back(monomial_rel(q, f, {"x1", "x1", "x1", "x1"}));
  rels.push_back(monomial_rel(q, f, {"x2", "x2", "x2", "x2"}));
  rels.push_back(comm_rel(q, f, {"x1", "b"}, {"b", "x2"}));
  return build_algebra(q, rels, f, 8);
}

// The cyclic quiver with a loop from the closing example: vertices
// 1..n+4, a loop at 1, a double arrow 2 -> 3 ... see the corpus module for
// the full description.
inline AlgebraPtr make_final_example(int m, int n, std::uint32_t p = 2) {
  Quiver q;
  for (int i = 1; i <= n + 4; ++i) q.add_vertex(std::to_string(i));
  q.add_arrow("alpha", "1", "1");
  q.add_arrow("beta", "1", "2");
  q.add_arrow("gamma1", "2", "3");
  q.add_arrow("gamma2", "2", "3");
  q.add_arrow("delta", "3", "4");
  for (int i = 1; i <= n; ++i)
    q.add_arrow("rho" + std::to_string(i), std::to_string(3 + i),
                std::to_string(4 + i));
  q.add_arrow("mu1", std::to_string(n + 4), "1");
  q.add_arrow("mu2", std::to_string(n + 4), "1");
  Field f = Field::prime(p);
  std::vector<Relation> rels;
  {
    PathWord w;
    w.vertex = 0;
    w.arrows.assign(m, q.arrow_id("alpha"));
    rels.push_back({{f.one(), w}});
  }
  rels.push_back(monomial_rel(q, f, {"alpha", "beta"}));
  rels.push_back(comm_rel(q, f, {"gamma1", "delta"}, {"gamma2", "delta"}));
  std::string rho_n = "rho" + std::to_string(n);
  rels.push_back(monomial_rel(q, f, {rho_n.c_str(), "mu1", "alpha"}));
  rels.push_back(monomial_rel(q, f, {rho_n.c_str(), "mu2", "alpha"}));
  rels.push_back(monomial_rel(q, f, {"mu1", "beta"}));
  rels.push_back(monomial_rel(q, f, {"mu2", "beta"}));
  return build_algebra(q, rels, f, n + 6);
}

// Seeded random module: a random quotient of a random projective by a
// random arrow-stable submodule of its radical.
inline Rep random_module(const AlgebraPtr& a, SplitRng& rng, int max_copies = 2,
                         int max_gens = 3) {
  const Quiver& q = a->quiver();
  const Field& F = a->field();
  std::vector<Rep> parts;
  for (int v = 0; v < q.n_vertices(); ++v) {
    int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_copies) + 1));
    for (int k = 0; k < c; ++k)
      parts.push_back(standard_module(a, StandardKind::Projective, v));
  }
  if (parts.empty()) parts.push_back(standard_module(
      a, StandardKind::Projective,
      static_cast<int>(rng.below(static_cast<std::uint64_t>(q.n_vertices())))));
  Rep p = direct_sum(a, parts).sum;
  auto rad = radical_submodule(p);
  int gens = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens) + 1));
  std::vector<Mat> seed(q.n_vertices());
  for (int v = 0; v < q.n_vertices(); ++v) seed[v] = Mat(F, p.dim[v], 0);
  const std::uint32_t ch = F.characteristic();
  for (int g = 0; g < gens; ++g) {
    int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(q.n_vertices())));
    if (rad.sub.dim[v] == 0) continue;
    Mat vec(F, p.dim[v], 1);
    for (int r = 0; r < rad.sub.dim[v]; ++r) {
      Scalar c = F.of_int(static_cast<long long>(rng.below(ch)));
      if (F.is_zero(c)) continue;
      for (int i = 0; i < p.dim[v]; ++i)
        vec.at(i, 0) =
            F.add(vec.at(i, 0), F.mul(c, rad.incl.comp[v].at(i, r)));
    }
    seed[v] = hstack(seed[v], vec);
  }
  auto closure = arrow_stable_closure(p, seed);
  return quotient_by_subspaces(p, closure).quot;
}

}  // namespace qhom::testutil

#endif
