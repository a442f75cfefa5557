#include "qhom/field.hpp"

#include <limits>
#include <numeric>

namespace qhom {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw BadField("field characteristic must be a prime in [2, 2^31): got " +
                   std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

namespace {
long long mod_norm(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return r;
}

long long inv_mod(long long a, std::uint32_t p) {
  long long t = 0, newt = 1;
  long long r = p, newr = a % static_cast<long long>(p);
  if (newr < 0) newr += p;
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw ArithmeticOverflow("element not invertible mod p");
  if (t < 0) t += p;
  return t;
}
}  // namespace

Scalar Field::reduce(__int128 num, __int128 den) const {
  if (den == 0) throw ArithmeticOverflow("division by zero");
  if (num == 0) return Scalar{0, 1};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  num /= a;
  den /= a;
  const __int128 lim = std::numeric_limits<long long>::max();
  if (num > lim || num < -lim || den > lim)
    throw ArithmeticOverflow("rational arithmetic exceeded 64 bits");
  return Scalar{static_cast<long long>(num), static_cast<long long>(den)};
}

Scalar Field::of_int(long long v) const {
  if (p_) return Scalar{mod_norm(v, p_), 1};
  return Scalar{v, 1};
}

Scalar Field::of_fraction(long long num, long long den) const {
  if (den == 0) throw ArithmeticOverflow("fraction with zero denominator");
  if (p_) {
    long long d = mod_norm(den, p_);
    if (d == 0) throw ArithmeticOverflow("fraction denominator divisible by p");
    return Scalar{mod_norm(num, p_) * inv_mod(d, p_) % p_, 1};
  }
  return reduce(num, den);
}

Scalar Field::rat_add(const Scalar& a, const Scalar& b) const {
  return reduce(static_cast<__int128>(a.num) * b.den +
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

Scalar Field::rat_sub(const Scalar& a, const Scalar& b) const {
  return reduce(static_cast<__int128>(a.num) * b.den -
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
}

Scalar Field::rat_mul(const Scalar& a, const Scalar& b) const {
  return reduce(static_cast<__int128>(a.num) * b.num,
                static_cast<__int128>(a.den) * b.den);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) throw ArithmeticOverflow("division by zero");
  if (p_) return mul(a, inv(b));
  return reduce(static_cast<__int128>(a.num) * b.den,
                static_cast<__int128>(a.den) * b.num);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw ArithmeticOverflow("inverse of zero");
  if (p_) return Scalar{inv_mod(a.num, p_), 1};
  Scalar r{a.den, a.num};
  if (r.den < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

std::string Field::str(const Scalar& a) const {
  if (p_ || a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

std::string Field::name() const {
  return p_ ? "F" + std::to_string(p_) : "Q";
}

}  // namespace qhom
