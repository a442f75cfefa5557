#include "qhom/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace qhom {

namespace {

constexpr size_t kPathBudget = 200000;  // per-degree enumeration guard

struct DegreePaths {
  std::vector<std::vector<int>> words;           // lex order
  std::map<std::vector<int>, int> index;         // word -> local index
  std::vector<int> src, tgt;
  std::vector<std::vector<int>> by_tgt, by_src;  // vertex -> local indices
};

SparseVec sparse_add(const Field& F, const SparseVec& a, const SparseVec& b,
                     const Scalar& bscale) {
  SparseVec out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar v = F.mul(b[j].second, bscale);
      if (!F.is_zero(v)) out.push_back({b[j].first, v});
      ++j;
    } else {
      Scalar v = F.add(a[i].second, F.mul(b[j].second, bscale));
      if (!F.is_zero(v)) out.push_back({a[i].first, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec Algebra::mult(int i, int j) const {
  const BasisElement& a = basis_[i];
  const BasisElement& b = basis_[j];
  if (a.tgt != b.src) return {};
  if (a.len == 0) return {{j, f_.one()}};
  if (b.len == 0) return {{i, f_.one()}};
  if (a.len + b.len >= nilpotency_) return {};
  std::vector<int> key = a.path.arrows;
  key.insert(key.end(), b.path.arrows.begin(), b.path.arrows.end());
  auto it = path_nf_.find(key);
  assert(it != path_nf_.end());
  return it->second;
}

SparseVec Algebra::mult_by_arrow(int i, int arrow) const {
  return mult(i, arrow_basis_index(arrow));
}

SparseVec Algebra::normal_form(const PathWord& w) const {
  path_endpoints(q_, w);
  if (w.trivial()) return {{trivial_path_index(w.vertex), f_.one()}};
  if (w.length() >= nilpotency_) return {};
  auto it = path_nf_.find(w.arrows);
  assert(it != path_nf_.end());
  return it->second;
}

std::pair<int, int> Algebra::parent_of(int i) const {
  const BasisElement& b = basis_[i];
  assert(b.len >= 1);
  int arrow = b.path.arrows.back();
  if (b.len == 1) return {trivial_path_index(b.src), arrow};
  std::vector<int> prefix(b.path.arrows.begin(), b.path.arrows.end() - 1);
  auto it = path_nf_.find(prefix);
  assert(it != path_nf_.end() && it->second.size() == 1);
  return {it->second[0].first, arrow};
}

SparseVec Algebra::evaluate(const Relation& r) const {
  SparseVec acc;
  for (const auto& term : r) acc = sparse_add(f_, acc, normal_form(term.path), term.coeff);
  return acc;
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  std::call_once(op_once_, [this]() {
    std::vector<Relation> op_rels;
    for (const auto& r : rels_) {
      Relation rr;
      for (const auto& t : r) {
        PathWord w = t.path;
        std::reverse(w.arrows.begin(), w.arrows.end());
        rr.push_back({t.coeff, w});
      }
      op_rels.push_back(std::move(rr));
    }
    op_ = build_algebra(q_.opposite(), op_rels, f_, max_length_);
  });
  return op_;
}

int loewy_length(const Algebra& a) { return a.loewy_length(); }

AlgebraPtr opposite_algebra(const Algebra& a) { return a.opposite(); }

AlgebraPtr build_algebra(const Quiver& q, const std::vector<Relation>& rels,
                         const Field& f, int max_length) {
  if (q.n_vertices() == 0) throw QuiverError("quiver has no vertices");
  if (max_length < 2) throw NotAdmissible(max_length);

  // Validate and normalize relations.
  std::vector<Relation> clean;
  for (const auto& r : rels) {
    std::map<std::vector<int>, Scalar> combined;
    int rsrc = -1, rtgt = -1, rlen = -1;
    for (const auto& term : r) {
      Scalar c = term.coeff;
      if (f.is_zero(c)) continue;
      auto [s, t] = path_endpoints(q, term.path);
      if (term.path.length() < 2)
        throw RelationDegreeTooLow("relation term of path length < 2");
      if (rsrc < 0) {
        rsrc = s;
        rtgt = t;
        rlen = term.path.length();
      } else if (s != rsrc || t != rtgt) {
        throw NonParallelRelation("relation terms are not parallel paths");
      } else if (term.path.length() != rlen) {
        throw NonHomogeneousRelation(
            "relation terms have different path lengths; only homogeneous "
            "relations are supported");
      }
      auto [it, fresh] = combined.insert({term.path.arrows, c});
      if (!fresh) it->second = f.add(it->second, c);
    }
    Relation rr;
    for (auto& [word, c] : combined) {
      if (f.is_zero(c)) continue;
      PathWord w;
      w.vertex = q.arrow(word.front()).src;
      w.arrows = word;
      rr.push_back({c, w});
    }
    if (!rr.empty()) clean.push_back(std::move(rr));
  }

  auto alg = std::make_shared<Algebra>();
  alg->q_ = q;
  alg->f_ = f;
  alg->rels_ = clean;
  alg->max_length_ = max_length;

  // Degree 0: trivial paths.
  for (int v = 0; v < q.n_vertices(); ++v) {
    PathWord w;
    w.vertex = v;
    alg->basis_.push_back({w, v, v, 0});
  }

  std::vector<DegreePaths> degs(1);
  degs[0].words = {};  // trivial paths handled separately
  degs[0].by_tgt.assign(q.n_vertices(), {});
  degs[0].by_src.assign(q.n_vertices(), {});

  // Enumerate degree-d paths in lex order from degree d-1.
  auto enumerate = [&](int d) {
    DegreePaths dp;
    dp.by_tgt.assign(q.n_vertices(), {});
    dp.by_src.assign(q.n_vertices(), {});
    auto push = [&](std::vector<int> word, int s, int t) {
      int idx = static_cast<int>(dp.words.size());
      dp.index[word] = idx;
      dp.words.push_back(std::move(word));
      dp.src.push_back(s);
      dp.tgt.push_back(t);
      dp.by_tgt[t].push_back(idx);
      dp.by_src[s].push_back(idx);
    };
    if (d == 1) {
      for (int a = 0; a < q.n_arrows(); ++a)
        push({a}, q.arrow(a).src, q.arrow(a).tgt);
    } else {
      const DegreePaths& prev = degs[d - 1];
      for (size_t i = 0; i < prev.words.size(); ++i) {
        for (int a = 0; a < q.n_arrows(); ++a) {
          if (q.arrow(a).src != prev.tgt[i]) continue;
          std::vector<int> word = prev.words[i];
          word.push_back(a);
          push(std::move(word), prev.src[i], q.arrow(a).tgt);
        }
      }
    }
    if (dp.words.size() > kPathBudget)
      throw BuildBudgetExceeded("path enumeration exceeded budget at length " +
                                std::to_string(d) +
                                "; the ideal is unlikely to be admissible");
    return dp;
  };

  int nilpotency = -1;
  for (int d = 1; d <= max_length; ++d) {
    degs.push_back(enumerate(d));
    DegreePaths& dp = degs[d];
    const int m = static_cast<int>(dp.words.size());

    // Echelon basis of the degree-d piece of the ideal.  Rows are kept fully
    // reduced; the pivot of each row is its greatest path in lex order, so
    // the surviving basis is the lex-least set of paths.
    std::map<int, std::vector<Scalar>> rows;  // pivot -> row
    auto reduce = [&](std::vector<Scalar>& v) {
      for (const auto& [piv, row] : rows) {
        if (f.is_zero(v[piv])) continue;
        Scalar c = v[piv];
        for (int t = 0; t <= piv; ++t)
          if (!f.is_zero(row[t])) v[t] = f.sub(v[t], f.mul(c, row[t]));
      }
    };
    auto insert_row = [&](std::vector<Scalar> v) {
      reduce(v);
      int piv = -1;
      for (int t = m - 1; t >= 0; --t)
        if (!f.is_zero(v[t])) {
          piv = t;
          break;
        }
      if (piv < 0) return;
      Scalar s = f.inv(v[piv]);
      for (auto& x : v) x = f.mul(x, s);
      for (auto& [p2, row] : rows) {
        (void)p2;
        if (f.is_zero(row[piv])) continue;
        Scalar c = row[piv];
        for (int t = 0; t <= piv; ++t)
          if (!f.is_zero(v[t])) row[t] = f.sub(row[t], f.mul(c, v[t]));
      }
      rows[piv] = std::move(v);
    };

    for (const auto& rel : clean) {
      const int rlen = rel.front().path.length();
      if (rlen > d) continue;
      auto [rsrc, rtgt] = path_endpoints(q, rel.front().path);
      for (int k = 0; k + rlen <= d; ++k) {
        const int qlen = d - k - rlen;
        // left factors: degree-k paths ending at the relation source
        std::vector<const std::vector<int>*> lefts;
        if (k == 0) {
          static const std::vector<int> kEmpty;
          lefts.push_back(&kEmpty);
        } else {
          for (int idx : degs[k].by_tgt[rsrc]) lefts.push_back(&degs[k].words[idx]);
        }
        std::vector<const std::vector<int>*> rights;
        if (qlen == 0) {
          static const std::vector<int> kEmpty;
          rights.push_back(&kEmpty);
        } else {
          for (int idx : degs[qlen].by_src[rtgt]) rights.push_back(&degs[qlen].words[idx]);
        }
        for (const auto* lp : lefts) {
          for (const auto* rp : rights) {
            std::vector<Scalar> row(m, f.zero());
            for (const auto& term : rel) {
              std::vector<int> word = *lp;
              word.insert(word.end(), term.path.arrows.begin(), term.path.arrows.end());
              word.insert(word.end(), rp->begin(), rp->end());
              int idx = dp.index.at(word);
              row[idx] = f.add(row[idx], term.coeff);
            }
            insert_row(std::move(row));
          }
        }
      }
    }

    // Surviving basis paths and normal forms at this degree.
    std::vector<int> global_of_local(m, -1);
    int survivors = 0;
    for (int i = 0; i < m; ++i) {
      if (rows.count(i)) continue;
      global_of_local[i] = static_cast<int>(alg->basis_.size());
      PathWord w;
      w.vertex = dp.src[i];
      w.arrows = dp.words[i];
      alg->basis_.push_back({w, dp.src[i], dp.tgt[i], d});
      ++survivors;
    }
    for (int i = 0; i < m; ++i) {
      SparseVec nf;
      if (global_of_local[i] >= 0) {
        nf.push_back({global_of_local[i], f.one()});
      } else {
        const auto& row = rows.at(i);
        for (int t = 0; t < i; ++t)
          if (!f.is_zero(row[t])) {
            assert(global_of_local[t] >= 0);
            nf.push_back({global_of_local[t], f.neg(row[t])});
          }
        std::sort(nf.begin(), nf.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
      }
      alg->path_nf_[dp.words[i]] = std::move(nf);
    }

    if (survivors == 0) {
      nilpotency = d;
      break;
    }
  }

  if (nilpotency < 0) throw NotAdmissible(max_length);
  alg->nilpotency_ = nilpotency;

  alg->by_src_.assign(q.n_vertices(), {});
  for (int i = 0; i < alg->dimension(); ++i)
    alg->by_src_[alg->basis_[i].src].push_back(i);

  return alg;
}

}  // namespace qhom
