#ifndef QHOM_POLYFP_HPP
#define QHOM_POLYFP_HPP

#include <cstdint>
#include <vector>

#include "qhom/field.hpp"

namespace qhom {

// Univariate polynomial arithmetic over a prime field.  Coefficients are
// stored ascending; the zero polynomial is the empty vector.  Used for
// minimal-polynomial splitting in the decomposition engine.
using Poly = std::vector<Scalar>;

struct SplitRng {
  std::uint64_t state;
  explicit SplitRng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n);
};

Poly poly_trim(const Field& F, Poly p);
int poly_deg(const Poly& p);  // -1 for zero
Poly poly_monic(const Field& F, const Poly& p);
Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
// quotient/remainder by a nonzero divisor
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& F, Poly a, Poly b);  // monic
Poly poly_derivative(const Field& F, const Poly& p);
Poly poly_mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
Poly poly_powmod(const Field& F, Poly base, unsigned long long e, const Poly& m);

// Distinct monic irreducible factors of p (multiplicities dropped), sorted
// by degree then coefficient order.  Deterministic given the seed: small
// characteristics use Berlekamp splitting with exhaustive root offsets,
// large ones seeded Cantor-Zassenhaus.
std::vector<Poly> poly_distinct_irreducible_factors(const Field& F, const Poly& p,
                                                    std::uint64_t seed);

}  // namespace qhom

#endif
