#include "qhom/polyfp.hpp"

#include <algorithm>
#include <cassert>

#include "qhom/matrix.hpp"

namespace qhom {

std::uint64_t SplitRng::next() {
  // splitmix64
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitRng::below(std::uint64_t n) { return n ? next() % n : 0; }

Poly poly_trim(const Field& F, Poly p) {
  while (!p.empty() && F.is_zero(p.back())) p.pop_back();
  return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_monic(const Field& F, const Poly& p) {
  Poly q = poly_trim(F, p);
  if (q.empty()) return q;
  Scalar inv = F.inv(q.back());
  for (auto& c : q) c = F.mul(c, inv);
  return q;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), F.zero());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = F.add(c[i], b[i]);
  return poly_trim(F, c);
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), F.zero());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = F.sub(c[i], b[i]);
  return poly_trim(F, c);
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, F.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return poly_trim(F, c);
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
  Poly r = poly_trim(F, a);
  Poly bb = poly_trim(F, b);
  assert(!bb.empty());
  Poly q;
  if (r.size() >= bb.size()) q.assign(r.size() - bb.size() + 1, F.zero());
  Scalar lead_inv = F.inv(bb.back());
  while (r.size() >= bb.size() && !r.empty()) {
    size_t shift = r.size() - bb.size();
    Scalar c = F.mul(r.back(), lead_inv);
    q[shift] = c;
    for (size_t i = 0; i < bb.size(); ++i)
      r[shift + i] = F.sub(r[shift + i], F.mul(c, bb[i]));
    r = poly_trim(F, r);
  }
  return {poly_trim(F, q), r};
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
  a = poly_trim(F, a);
  b = poly_trim(F, b);
  while (!b.empty()) {
    Poly r = poly_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_derivative(const Field& F, const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i)
    d.push_back(F.mul(p[i], F.of_int(static_cast<long long>(i))));
  return poly_trim(F, d);
}

Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m) {
  return poly_divmod(F, poly_mul(F, a, b), m).second;
}

Poly poly_powmod(const Field& F, Poly base, unsigned long long e, const Poly& m) {
  Poly result{F.one()};
  base = poly_divmod(F, base, m).second;
  while (e) {
    if (e & 1) result = poly_mulmod(F, result, base, m);
    base = poly_mulmod(F, base, base, m);
    e >>= 1;
  }
  return result;
}

namespace {

bool poly_less(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i].num != b[i].num) return a[i].num < b[i].num;
    if (a[i].den != b[i].den) return a[i].den < b[i].den;
  }
  return false;
}

// p-th root of a polynomial of the form v(t^p) over F_p.
Poly pth_root(const Field& F, const Poly& p) {
  const std::uint32_t ch = F.characteristic();
  Poly r;
  for (size_t i = 0; i < p.size(); i += ch) r.push_back(p[i]);
  return poly_trim(F, r);
}

// Recursive Berlekamp factorization of a squarefree monic polynomial.
void berlekamp_factor(const Field& F, const Poly& f, SplitRng& rng,
                      std::vector<Poly>& out) {
  const int d = poly_deg(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f);
    return;
  }
  const std::uint32_t p = F.characteristic();
  // Frobenius matrix on F_p[t]/f
  Mat frob(F, d, d);
  for (int j = 0; j < d; ++j) {
    Poly tj(static_cast<size_t>(j) + 1, F.zero());
    tj[j] = F.one();
    Poly fj = poly_powmod(F, tj, p, f);
    for (int i = 0; i < d && i < static_cast<int>(fj.size()); ++i)
      frob.at(i, j) = fj[i];
  }
  Mat ker = kernel_basis(sub(frob, Mat::identity(F, d)));
  if (ker.cols() == 1) {
    out.push_back(f);  // irreducible
    return;
  }
  // a non-constant element of the Berlekamp subalgebra
  Poly b;
  for (int k = 0; k < ker.cols() && b.empty(); ++k) {
    Poly cand;
    for (int i = 0; i < d; ++i) cand.push_back(ker.at(i, k));
    cand = poly_trim(F, cand);
    if (poly_deg(cand) >= 1) b = cand;
  }
  assert(!b.empty());
  Poly g;
  if (p <= 4096) {
    for (std::uint32_t c = 0; c < p && g.empty(); ++c) {
      Poly cand = poly_gcd(F, f, poly_sub(F, b, Poly{F.of_int(c)}));
      if (poly_deg(cand) >= 1 && poly_deg(cand) < d) g = cand;
    }
  } else {
    for (int tries = 0; tries < 512 && g.empty(); ++tries) {
      Poly r;
      for (int k = 0; k < ker.cols(); ++k) {
        Poly col;
        for (int i = 0; i < d; ++i) col.push_back(ker.at(i, k));
        Scalar c = F.of_int(static_cast<long long>(rng.below(p)));
        r = poly_add(F, r, [&] {
          Poly s = col;
          for (auto& x : s) x = F.mul(x, c);
          return s;
        }());
      }
      r = poly_trim(F, r);
      if (poly_deg(r) < 1) continue;
      Poly pw = poly_powmod(F, r, (static_cast<unsigned long long>(p) - 1) / 2, f);
      Poly cand = poly_gcd(F, f, poly_sub(F, pw, Poly{F.one()}));
      if (poly_deg(cand) >= 1 && poly_deg(cand) < d) g = cand;
    }
  }
  if (g.empty()) throw ArithmeticOverflow("polynomial splitting budget exhausted");
  berlekamp_factor(F, g, rng, out);
  berlekamp_factor(F, poly_divmod(F, f, g).first, rng, out);
}

}  // namespace

std::vector<Poly> poly_distinct_irreducible_factors(const Field& F, const Poly& p,
                                                    std::uint64_t seed) {
  SplitRng rng(seed ^ 0xABCDEF1234567890ULL);
  std::vector<Poly> out;
  Poly work = poly_monic(F, p);
  // reduce to squarefree pieces, handling derivative-zero in characteristic p
  while (poly_deg(work) >= 1) {
    Poly d = poly_derivative(F, work);
    if (d.empty()) {
      work = pth_root(F, work);
      continue;
    }
    Poly g = poly_gcd(F, work, d);
    Poly sf = poly_divmod(F, work, g).first;  // squarefree
    berlekamp_factor(F, poly_monic(F, sf), rng, out);
    work = g;
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qhom
