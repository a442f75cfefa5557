#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace qhom;
using namespace qhom::testutil;

namespace {
Rep simple(const AlgebraPtr& a, int v) {
  return standard_module(a, StandardKind::Simple, v);
}
Rep projective(const AlgebraPtr& a, int v) {
  return standard_module(a, StandardKind::Projective, v);
}
Rep injective(const AlgebraPtr& a, int v) {
  return standard_module(a, StandardKind::Injective, v);
}

// k[x]/x^j as a module over k[x]/x^n
Rep truncated_module(const AlgebraPtr& loop, int j) {
  const Field& f = loop->field();
  Mat x(f, j, j);
  for (int i = 0; i + 1 < j; ++i) x.at(i + 1, i) = f.one();
  return make_rep(loop, {j}, {x});
}

// columns of `cols` all lie in the span of `space`
bool contained_in(const Mat& cols, const Mat& space) {
  return rank(hstack(space, cols)) == rank(space);
}
}  // namespace

TEST_CASE("syzygies over A_2 and Kronecker") {
  auto a2 = make_a2();
  Rep o1 = syzygy(simple(a2, 0), 1);
  CHECK(indec_isomorphic(o1, simple(a2, 1)));
  CHECK(syzygy(projective(a2, 0), 1).is_zero_rep());
  CHECK(syzygy(simple(a2, 0), 0).dim == simple(a2, 0).dim);

  auto kr = make_kronecker();
  Rep ok = syzygy(simple(kr, 0), 1);
  CHECK(ok.dim == std::vector<int>{0, 2});
  for (const auto& m : ok.act) CHECK(m.is_zero());
}

TEST_CASE("syzygies over the truncated polynomial algebra") {
  auto loop = make_loop(4, 3);
  for (int j = 1; j <= 3; ++j) {
    Rep o = syzygy(truncated_module(loop, j), 1);
    CHECK(is_isomorphic(o, truncated_module(loop, 4 - j)));
  }
}

TEST_CASE("cosyzygies via duality") {
  auto a2 = make_a2();
  Rep c = cosyzygy(simple(a2, 1), 1);
  CHECK(indec_isomorphic(c, simple(a2, 0)));
  CHECK(cosyzygy(injective(a2, 0), 1).is_zero_rep());
  CHECK(cosyzygy(injective(a2, 1), 1).is_zero_rep());

  auto loop = make_loop(4, 3);
  for (int j = 1; j <= 3; ++j) {
    Rep c2 = cosyzygy(truncated_module(loop, j), 1);
    CHECK(is_isomorphic(c2, truncated_module(loop, 4 - j)));
  }
}

TEST_CASE("omega iteration composes") {
  auto a = make_t2_loop4(3);
  SplitRng rng(11);
  for (int i = 0; i < 6; ++i) {
    Rep m = random_module(a, rng);
    if (m.total() > 40) continue;
    Rep two_step = syzygy(syzygy(m, 1), 1);
    Rep direct = syzygy(m, 2);
    CHECK(two_step.dim == direct.dim);
    if (m.A->field().characteristic() != 0 && direct.total() <= 40)
      CHECK(is_isomorphic(two_step, direct));
  }
}

TEST_CASE("projective dimensions with cutoff and periodicity") {
  auto a2 = make_a2();
  CHECK(proj_dimension(projective(a2, 0), 32) == ExtValue::finite(0));
  CHECK(proj_dimension(simple(a2, 0), 32) == ExtValue::finite(1));

  auto loop = make_loop(4, 3);
  ExtValue pd = proj_dimension(simple(loop, 0), 32);
  CHECK(pd.kind == ExtValue::InfinitePeriodic);
  // the period-2 certificate: Omega^1(S) = k[x]/x^3, Omega^2(S) = S
  CHECK(pd.period_from == 0);
  CHECK(pd.period_to == 2);
  Rep o1 = syzygy(simple(loop, 0), 1);
  CHECK(is_isomorphic(o1, truncated_module(loop, 3)));
  CHECK(is_isomorphic(syzygy(simple(loop, 0), 2), simple(loop, 0)));
}

TEST_CASE("global dimension") {
  CHECK(global_dimension(make_semisimple2(), 32) == ExtValue::finite(0));
  CHECK(global_dimension(make_a2(), 32) == ExtValue::finite(1));
  CHECK(global_dimension(make_a5(), 32) == ExtValue::finite(1));
  CHECK(global_dimension(make_beilinson2(), 32) == ExtValue::finite(2));
  CHECK(global_dimension(make_monomial_abc(), 32) == ExtValue::finite(2));
  ExtValue g = global_dimension(make_loop(4, 3), 32);
  CHECK_FALSE(g.is_finite());
}

TEST_CASE("gldim agrees with the opposite algebra when finite") {
  for (auto a : {make_a2(), make_a5(), make_beilinson2(), make_monomial_abc()}) {
    ExtValue g1 = global_dimension(a, 32);
    ExtValue g2 = global_dimension(a->opposite(), 32);
    CHECK(g1 == g2);
  }
}

TEST_CASE("selfinjectivity and Gorenstein data") {
  auto loop = make_loop(4, 3);
  auto g = self_injectivity_and_gorenstein(loop, 16);
  CHECK(g.selfinjective);
  CHECK(g.left_id == ExtValue::finite(0));
  CHECK(g.right_id == ExtValue::finite(0));

  auto a2 = make_a2();
  auto g2 = self_injectivity_and_gorenstein(a2, 16);
  CHECK_FALSE(g2.selfinjective);
  CHECK(g2.left_id == ExtValue::finite(1));
  CHECK(g2.right_id == ExtValue::finite(1));

  auto ext2 = make_exterior(2, 3);
  auto g3 = self_injectivity_and_gorenstein(ext2, 8);
  CHECK(g3.selfinjective);
  CHECK(g3.left_id == ExtValue::finite(0));
}

TEST_CASE("T_2(k[x]/x^4) is 1-Gorenstein but not selfinjective") {
  auto t2 = make_t2_loop4(3);
  auto g = self_injectivity_and_gorenstein(t2, 16);
  CHECK_FALSE(g.selfinjective);
  CHECK(g.left_id == ExtValue::finite(1));
  CHECK(g.right_id == ExtValue::finite(1));
}

TEST_CASE("minimal resolutions are minimal and exact") {
  for (auto a : {make_a2(), make_beilinson2(), make_t2_loop4(3)}) {
    SplitRng rng(3);
    for (int i = 0; i < 5; ++i) {
      Rep m = random_module(a, rng);
      auto res = minimal_resolution(m, 4);
      for (size_t t = 0; t < res.terms.size(); ++t) {
        // image of the differential is inside the radical of its target
        if (t == 0) continue;
        auto rad = radical_submodule(res.terms[t - 1]);
        for (size_t v = 0; v < m.dim.size(); ++v)
          CHECK(contained_in(res.differentials[t].comp[v], rad.incl.comp[v]));
      }
      // dim Omega^1 = dim P_0 - dim M vertexwise
      if (!res.terms.empty()) {
        for (size_t v = 0; v < m.dim.size(); ++v)
          CHECK(res.syzygies[0].dim[v] == res.terms[0].dim[v] - m.dim[v]);
      }
    }
  }
}

TEST_CASE("horseshoe: split sequences add resolutions termwise") {
  auto a2 = make_a2();
  Rep s2 = simple(a2, 1), s1 = simple(a2, 0);
  SumDecomp sd = direct_sum(a2, {s2, s1});
  ShortExact split{sd.inject[0], sd.project[1]};
  auto hs = horseshoe(split, 2);
  auto ra = minimal_resolution(s2, 2);
  auto rc = minimal_resolution(s1, 2);
  for (size_t t = 0; t < hs.terms.size(); ++t) {
    for (size_t v = 0; v < 2; ++v) {
      int want = 0;
      if (t < ra.term_mults.size()) want += ra.term_mults[t][v];
      if (t < rc.term_mults.size()) want += rc.term_mults[t][v];
      CHECK(hs.term_mults[t][v] == want);
    }
  }
}

TEST_CASE("horseshoe on the radical sequence of P(1)") {
  auto a2 = make_a2();
  Rep p1 = projective(a2, 0);
  auto rad = radical_submodule(p1);            // S(2) -> P(1)
  auto top = quotient_by_subspaces(p1, rad.incl.comp);  // P(1) -> S(1)
  ShortExact ses{rad.incl, top.proj};
  auto hs = horseshoe(ses, 1);
  REQUIRE(hs.terms.size() >= 1);
  // degree-0 term is P(2) (+) P(1)
  CHECK(hs.term_mults[0] == std::vector<int>{1, 1});
  // exactness: the first differential is surjective onto B = P(1)
  for (size_t v = 0; v < 2; ++v)
    CHECK(rank(hs.differentials[0].comp[v]) == p1.dim[v]);
  // composite of consecutive differentials vanishes
  if (hs.differentials.size() >= 2)
    CHECK(morphism_is_zero(compose(hs.differentials[1], hs.differentials[0])));
}

TEST_CASE("horseshoe of two projectives stops after one term") {
  auto a2 = make_a2();
  Rep p1 = projective(a2, 0), p2 = projective(a2, 1);
  SumDecomp sd = direct_sum(a2, {p2, p1});
  auto hs = horseshoe(ShortExact{sd.inject[0], sd.project[1]}, 3);
  REQUIRE(hs.terms.size() == 1);
  CHECK(hs.term_mults[0] == std::vector<int>{1, 1});
  CHECK(morphism_is_iso(hs.differentials[0]));
}

TEST_CASE("bounds over a semisimple algebra with V = all vertices") {
  auto ss = make_semisimple2();
  BoundReport r = derived_dim_bounds(ss, {0, 1}, 8);
  CHECK(r.ll_tv == 0);
  CHECK(r.pd_v == ExtValue::finite(0));
  for (const auto& e : r.entries)
    if (e.name == "loewy_length_bound") CHECK(e.value == 0);
  REQUIRE(r.best);
  CHECK(*r.best == 0);
}

TEST_CASE("horseshoe rejects non-exact input") {
  auto a2 = make_a2();
  Rep s1 = simple(a2, 0), s2 = simple(a2, 1);
  Morphism z12 = zero_morphism(s1, s2);
  Morphism z21 = zero_morphism(s2, s1);
  CHECK_THROWS_AS(horseshoe(ShortExact{z12, z21}, 1), NotExact);
}

TEST_CASE("strip projective: degenerate and trivial cases") {
  auto a2 = make_a2();
  Rep p2 = projective(a2, 1);
  // 0 -> P -> P -> 0 with M = 0
  ExactChain chain;
  chain.terms = {p2, p2};
  chain.maps = {identity_morphism(p2)};
  SummandWitness w;
  w.m = zero_rep(a2);
  w.p = p2;
  w.incl_m = zero_morphism(w.m, p2);
  w.proj_m = zero_morphism(p2, w.m);
  w.incl_p = identity_morphism(p2);
  w.proj_p = identity_morphism(p2);
  ExactChain out = strip_projective(chain, w);
  for (const auto& t : out.terms) CHECK(t.total() == 0);
}

TEST_CASE("strip projective relocates the summand") {
  // 0 -> S(2) -> P(1) (+) P(2) -> S(1) (+) P(2) -> 0 over A_2
  auto a2 = make_a2();
  Rep s1 = simple(a2, 0), s2 = simple(a2, 1);
  Rep p1 = projective(a2, 0), p2 = projective(a2, 1);
  SumDecomp mid = direct_sum(a2, {p1, p2});
  SumDecomp end = direct_sum(a2, {s1, p2});
  // map P(1)+P(2) -> S(1)+P(2): P(1) covers S(1), P(2) passes through
  auto cover = projective_cover(s1);
  Morphism f = add_morphisms(
      compose(mid.project[0], compose(cover.epi, end.inject[0])),
      compose(mid.project[1], compose(identity_morphism(p2), end.inject[1])));
  auto kf = factor(f);
  ExactChain chain;
  chain.terms = {end.sum, mid.sum, kf.kernel};
  chain.maps = {f, kf.kernel_incl};
  SummandWitness w;
  w.m = s1;
  w.p = p2;
  w.incl_m = end.inject[0];
  w.proj_m = end.project[0];
  w.incl_p = end.inject[1];
  w.proj_p = end.project[1];
  ExactChain out = strip_projective(chain, w);
  validate_chain_exact(out);
  // terms: [S(1), M_0 = P(1)+P(2), ker (+) P(2)]
  CHECK(out.terms[0].dim == s1.dim);
  CHECK(out.terms[1].dim == mid.sum.dim);
  std::vector<int> last = out.terms[2].dim;
  std::vector<int> expect = kf.kernel.dim;
  for (size_t v = 0; v < expect.size(); ++v) expect[v] += p2.dim[v];
  CHECK(last == expect);
}

TEST_CASE("strip projective keeps the chain when P = 0") {
  auto a2 = make_a2();
  Rep s1 = simple(a2, 0);
  auto cover = projective_cover(s1);
  auto kf = factor(cover.epi);
  ExactChain chain;
  chain.terms = {s1, cover.cover, kf.kernel};
  chain.maps = {cover.epi, kf.kernel_incl};
  SummandWitness w;
  w.m = s1;
  w.p = zero_rep(a2);
  w.incl_m = identity_morphism(s1);
  w.proj_m = identity_morphism(s1);
  w.incl_p = zero_morphism(w.p, s1);
  w.proj_p = zero_morphism(s1, w.p);
  ExactChain out = strip_projective(chain, w);
  validate_chain_exact(out);
  CHECK(out.terms.size() == 3);
  CHECK(out.terms[0].dim == s1.dim);
  for (size_t v = 0; v < 2; ++v)
    CHECK(out.terms[2].dim[v] == kf.kernel.dim[v]);
}

TEST_CASE("syzygy scans") {
  auto ss = make_semisimple2();
  std::vector<Rep> seeds;
  for (int v = 0; v < 2; ++v) seeds.push_back(simple(ss, v));
  auto cat = syzygy_scan(ss, seeds, 4);
  REQUIRE(cat.stabilized_at);
  CHECK(*cat.stabilized_at == 0);
  CHECK(cat.per_depth[0].empty());

  auto kr = make_kronecker();
  seeds.clear();
  for (int v = 0; v < 2; ++v) seeds.push_back(simple(kr, v));
  auto catk = syzygy_scan(kr, seeds, 4);
  REQUIRE(catk.stabilized_at);
  CHECK(*catk.stabilized_at == 1);
  // catalog at the stabilization depth is contained in {S(2)}
  for (const Rep& m : catk.per_depth[1])
    CHECK(indec_isomorphic(m, simple(kr, 1)));

  auto mono = make_monomial_abc();
  seeds.clear();
  for (int v = 0; v < 3; ++v) seeds.push_back(simple(mono, v));
  auto catm = syzygy_scan(mono, seeds, 5);
  REQUIRE(catm.stabilized_at);
  CHECK(*catm.stabilized_at <= 2);
}

TEST_CASE("composition factors") {
  auto a2 = make_a2();
  CHECK(composition_factors(simple(a2, 0)) == std::vector<int>{1, 0});
  CHECK(composition_factors(projective(a2, 0)) == std::vector<int>{1, 1});
  auto loop = make_loop(4, 3);
  CHECK(composition_factors(truncated_module(loop, 3)) == std::vector<int>{3});
}

TEST_CASE("filtration class membership") {
  auto a2 = make_a2();
  CHECK(in_filtration_class(zero_rep(a2), {}));
  CHECK(in_filtration_class(simple(a2, 0), {0}));
  CHECK_FALSE(in_filtration_class(projective(a2, 0), {0}));
  CHECK(in_filtration_class(projective(a2, 0), {0, 1}));
}

TEST_CASE("torsion radical extremes and the A_2 case") {
  auto a2 = make_a2();
  Rep p1 = projective(a2, 0);
  // V empty: everything is torsion
  CHECK(torsion_radical(p1, {}).sub.dim == p1.dim);
  // V = all vertices: nothing is torsion
  CHECK(torsion_radical(p1, {0, 1}).sub.is_zero_rep());
  // V = {2}: the smallest N with P(1)/N filtered by S(2) is P(1) itself
  CHECK(torsion_radical(p1, {1}).sub.dim == p1.dim);
  // postconditions on a mixed example
  Rep m = direct_sum(a2, {p1, simple(a2, 1)}).sum;
  auto t = torsion_radical(m, {1});
  auto q = quotient_by_subspaces(m, t.incl.comp);
  CHECK(in_filtration_class(q.quot, {1}));
  std::vector<int> top = top_multiplicities(t.sub);
  CHECK(top[1] == 0);
}

TEST_CASE("torsion radical is idempotent and additive") {
  for (auto a : {make_a2(), make_t2_loop4(3), make_radsquare()}) {
    SplitRng rng(19);
    const int nv = a->quiver().n_vertices();
    for (int i = 0; i < 8; ++i) {
      Rep m = random_module(a, rng);
      SimpleSet v;
      for (int u = 0; u < nv; ++u)
        if (rng.below(2)) v.push_back(u);
      auto t = torsion_radical(m, v);
      auto tt = torsion_radical(t.sub, v);
      CHECK(tt.sub.dim == t.sub.dim);
      // quotient lands in the filtration class
      auto q = quotient_by_subspaces(m, t.incl.comp);
      CHECK(in_filtration_class(q.quot, v));
      // additivity over direct sums (dimension vectors)
      Rep m2 = random_module(a, rng);
      auto tsum = torsion_radical(direct_sum(a, {m, m2}).sum, v);
      auto t2 = torsion_radical(m2, v);
      for (int u = 0; u < nv; ++u)
        CHECK(tsum.sub.dim[u] == t.sub.dim[u] + t2.sub.dim[u]);
      // layer length of the sum is the max of the layer lengths
      CHECK(t_layer_length(direct_sum(a, {m, m2}).sum, v).value ==
            std::max(t_layer_length(m, v).value, t_layer_length(m2, v).value));
    }
  }
}

TEST_CASE("layer length generalizes Loewy length") {
  for (auto a : {make_a2(), make_loop(4, 3), make_exterior(2, 3), make_t2_loop4(3)}) {
    Rep reg = regular_module(a);
    CHECK(t_layer_length(reg, {}).value == a->loewy_length());
    SimpleSet all;
    for (int v = 0; v < a->quiver().n_vertices(); ++v) all.push_back(v);
    CHECK(t_layer_length(reg, all).value == 0);
  }
}

TEST_CASE("pd of a set of simples") {
  auto a2 = make_a2();
  CHECK(pd_of_set(a2, {}, 32) == ExtValue::finite(-1));
  CHECK(pd_of_set(a2, {1}, 32) == ExtValue::finite(0));
  CHECK(pd_of_set(a2, {0, 1}, 32) == ExtValue::finite(1));
}

TEST_CASE("final example: pd V = 1 and layer length") {
  auto fe = make_final_example(5, 12, 2);
  SimpleSet v;
  for (int i = 2; i <= 13; ++i) v.push_back(i);  // vertices 3..n+2, 0-based
  CHECK(pd_of_set(fe, v, 32) == ExtValue::finite(1));
  Rep reg = regular_module(fe);
  int ll = t_layer_length(reg, v).value;
  CHECK(ll >= 5);
  CHECK(ll <= 6);
  MESSAGE("final example layer length: ", ll);
}

TEST_CASE("derived dimension bounds over A_2 with V = {2}") {
  auto a2 = make_a2();
  BoundReport r = derived_dim_bounds(a2, {1}, 32);
  CHECK(r.ll_tv == 1);
  CHECK(r.pd_v == ExtValue::finite(0));
  std::map<std::string, long long> got;
  for (const auto& e : r.entries)
    if (e.value) got[e.name] = *e.value;
  CHECK(got.at("loewy_length_bound") == 1);
  CHECK(got.at("global_dimension_bound") == 1);
  CHECK(got.at("layer_product_bound") == 2);
  CHECK(got.at("layer_sum_bound") == 3);
  CHECK(got.at("layer_max_bound") == 3);
  CHECK(got.at("igusa_todorov_bound") == 2);
  REQUIRE(r.best);
  CHECK(*r.best == 1);
}

TEST_CASE("derived dimension bounds for the exterior algebra, V empty") {
  auto e2 = make_exterior(2, 3);
  BoundReport r = derived_dim_bounds(e2, {}, 8);
  CHECK(r.ll_tv == 3);
  CHECK(r.pd_v == ExtValue::finite(-1));
  std::map<std::string, std::optional<long long>> got;
  for (const auto& e : r.entries) got[e.name] = e.value;
  CHECK_FALSE(got.at("global_dimension_bound").has_value());
  CHECK(got.at("loewy_length_bound") == 2);
  CHECK(got.at("layer_product_bound") == 2);
  CHECK(got.at("igusa_todorov_bound") == 3);
  REQUIRE(r.itdim_upper);
  CHECK(*r.itdim_upper == 1);
  REQUIRE(r.best);
  CHECK(*r.best == 2);
}

TEST_CASE("itdim upper bounds for exterior algebras") {
  CHECK(itdim_upper(make_exterior(2, 3), {}, 8) == 1);
  CHECK(itdim_upper(make_exterior(3, 3), {}, 8) == 2);
  CHECK(itdim_upper(make_semisimple2(), {}, 8) == 0);
}

TEST_CASE("the (m,n) Igusa-Todorov bound formula") {
  CHECK(mn_it_bound(1, 5) == 7);   // n + 2 at m = 1
  CHECK(mn_it_bound(0, 0) == 1);
  CHECK(mn_it_bound(2, 3) == 7);
  for (int m = 0; m < 5; ++m)
    for (int n = 0; n < 5; ++n) {
      CHECK(mn_it_bound(m + 1, n) >= mn_it_bound(m, n));
      CHECK(mn_it_bound(m, n + 1) >= mn_it_bound(m, n));
    }
  // arithmetic identity: itdim_upper + 2 >= ll when ll >= 2
  for (int ll = 2; ll < 10; ++ll) CHECK(std::max(ll - 2, 0) + 2 >= ll);
}

TEST_CASE("bound entries recompute from their recorded inputs") {
  auto t2 = make_t2_loop4(3);
  BoundReport r = derived_dim_bounds(t2, {}, 16);
  long long ll = r.ll_tv;
  long long pd = r.pd_v.value;  // -1 for the empty set
  for (const auto& e : r.entries) {
    if (!e.value) continue;
    if (e.name == "loewy_length_bound")
      CHECK(*e.value == t2->loewy_length() - 1);
    if (e.name == "layer_product_bound") CHECK(*e.value == (pd + 2) * (ll + 1) - 2);
    if (e.name == "layer_sum_bound") CHECK(*e.value == 2 * (pd + ll) + 1);
    if (e.name == "layer_max_bound")
      CHECK(*e.value == std::max(2 * ll + pd - 1, pd + 3));
    if (e.name == "igusa_todorov_bound")
      CHECK(*e.value == 2 * std::max(ll - 2, 0LL) + pd + 2);
  }
}

TEST_CASE("Igusa-Todorov certificates") {
  auto a2 = make_a2();
  Rep vmod =
      direct_sum(a2, {simple(a2, 0), simple(a2, 1), projective(a2, 0)}).sum;
  std::vector<Rep> samples{simple(a2, 0), simple(a2, 1), projective(a2, 0)};
  auto res = check_it_certificate(a2, {0, 0, vmod}, samples);
  CHECK(res.verdict == ITVerdict::VerifiedOnSamples);

  auto kr = make_kronecker();
  std::vector<Rep> simples{simple(kr, 0), simple(kr, 1)};
  auto res2 = check_it_certificate(kr, {0, 1, simple(kr, 1)}, simples);
  CHECK(res2.verdict == ITVerdict::VerifiedOnSamples);

  auto loop2 = make_loop(2, 2);
  auto res3 =
      check_it_certificate(loop2, {0, 1, zero_rep(loop2)}, {simple(loop2, 0)});
  CHECK(res3.verdict == ITVerdict::Refuted);
}

TEST_CASE("an (m>=1) certificate verifies through epimorphism search") {
  // over A_2, Omega^0(M) always fits 0 -> V_1 -> V_0 -> M -> 0 with
  // V = S(1) + S(2) + P(1): take the projective cover and its kernel
  auto a2 = make_a2();
  Rep vmod =
      direct_sum(a2, {simple(a2, 0), simple(a2, 1), projective(a2, 0)}).sum;
  std::vector<Rep> samples{simple(a2, 0), projective(a2, 0),
                           direct_sum(a2, {simple(a2, 0), simple(a2, 1)}).sum};
  auto res = check_it_certificate(a2, {1, 0, vmod}, samples);
  CHECK(res.verdict == ITVerdict::VerifiedOnSamples);
}

TEST_CASE("best V search") {
  auto ss = make_semisimple2();
  auto best = best_v_search(ss, 8);
  CHECK(best.report.best == 0);
  CHECK(best.v == SimpleSet{});  // ties break to the lexicographically least

  auto e2 = make_exterior(2, 3);
  auto beste = best_v_search(e2, 8);
  CHECK(beste.v == SimpleSet{});  // no simple has finite pd
  CHECK(beste.report.best == 2);

  auto a2 = make_a2();
  auto besta = best_v_search(a2, 8);
  CHECK(besta.report.best == 1);
}

TEST_CASE("selfinjective syzygy law on the truncated polynomial algebra") {
  auto loop = make_loop(4, 3);
  for (int j = 1; j <= 4; ++j) {
    Rep m = truncated_module(loop, j);
    for (int k = 0; k <= 4; ++k) {
      Rep roundtrip = cosyzygy(syzygy(m, k), k);
      // agree up to projective summands
      auto strip = [&](const Rep& x) {
        std::vector<Rep> keep;
        for (const auto& p : decompose(x).parts)
          if (!is_projective(p.part))
            for (int c = 0; c < p.multiplicity; ++c) keep.push_back(p.part);
        return keep.empty() ? zero_rep(loop) : direct_sum(loop, keep).sum;
      };
      CHECK(is_isomorphic(strip(m), strip(roundtrip)));
    }
  }
}
