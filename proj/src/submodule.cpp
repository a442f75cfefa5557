#include "qhom/submodule.hpp"

#include <map>
#include <set>

namespace qhom {

std::string subspace_key(const std::vector<Mat>& bases) {
  std::string key;
  for (const auto& b : bases) {
    key += std::to_string(b.cols());
    key += ':';
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) {
        key += std::to_string(b.at(i, j).num);
        key += ',';
        key += std::to_string(b.at(i, j).den);
        key += ';';
      }
    key += '|';
  }
  return key;
}

SubmoduleLattice all_submodules(const Rep& m, const LatticeCaps& caps) {
  const Field& F = m.A->field();
  if (F.is_rational())
    throw RationalFieldUnsupported("submodule enumeration needs a prime field");
  const Quiver& q = m.A->quiver();
  const unsigned long long p = F.characteristic();
  const int nv = q.n_vertices();

  // cyclic submodules generated by single homogeneous vectors
  std::set<std::string> cyclic_keys;
  std::vector<std::vector<Mat>> cyclics;
  for (int v = 0; v < nv; ++v) {
    unsigned long long total = 1;
    for (int i = 0; i < m.dim[v]; ++i) {
      total *= p;
      if (total > caps.vector_cap)
        throw CapExceeded("submodule enumeration: too many vectors at a vertex");
    }
    for (unsigned long long code = 1; code < total; ++code) {
      Mat vec(F, m.dim[v], 1);
      unsigned long long c = code;
      for (int i = 0; i < m.dim[v]; ++i) {
        vec.at(i, 0) = F.of_int(static_cast<long long>(c % p));
        c /= p;
      }
      std::vector<Mat> seed(nv);
      for (int u = 0; u < nv; ++u) seed[u] = Mat(F, m.dim[u], 0);
      seed[v] = vec;
      auto closed = arrow_stable_closure(m, seed);
      std::string key = subspace_key(closed);
      if (cyclic_keys.insert(key).second) cyclics.push_back(std::move(closed));
    }
  }

  SubmoduleLattice lat;
  std::set<std::string> seen;
  std::vector<Mat> zero(nv);
  for (int u = 0; u < nv; ++u) zero[u] = Mat(F, m.dim[u], 0);
  lat.submodules.push_back(zero);
  seen.insert(subspace_key(zero));

  for (size_t head = 0; head < lat.submodules.size(); ++head) {
    for (const auto& cyc : cyclics) {
      std::vector<Mat> sum(nv);
      for (int u = 0; u < nv; ++u)
        sum[u] = column_space_basis(hstack(lat.submodules[head][u], cyc[u]));
      std::string key = subspace_key(sum);
      if (seen.insert(key).second) {
        lat.submodules.push_back(std::move(sum));
        if (lat.submodules.size() > caps.count_cap)
          throw CapExceeded("submodule lattice exceeded the count cap");
      }
    }
  }
  return lat;
}

}  // namespace qhom
