#ifndef QHOM_FIELD_HPP
#define QHOM_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qhom {

struct BadField : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArithmeticOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A field element.  Over F_p the value lives in `num` (0 <= num < p, den == 1).
// Over the rationals num/den is kept reduced with den > 0.
struct Scalar {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// Exact coefficient field: a prime field F_p (2 <= p < 2^31) or the rationals.
// All arithmetic is exact; rational overflow past 64 bits is a hard error,
// never a wrong answer.  The prime-field paths are inline and branch-free.
class Field {
public:
  Field() : p_(0) {}
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar{0, 1}; }
  Scalar one() const { return Scalar{1, 1}; }
  Scalar of_int(long long v) const;
  Scalar of_fraction(long long num, long long den) const;

  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool is_one(const Scalar& a) const { return a == one(); }

  Scalar add(const Scalar& a, const Scalar& b) const {
    if (p_) {
      long long s = a.num + b.num;
      if (s >= static_cast<long long>(p_)) s -= p_;
      return Scalar{s, 1};
    }
    return rat_add(a, b);
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    if (p_) {
      long long s = a.num - b.num;
      if (s < 0) s += p_;
      return Scalar{s, 1};
    }
    return rat_sub(a, b);
  }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    if (p_)
      return Scalar{static_cast<long long>(
                        static_cast<unsigned long long>(a.num) * b.num % p_),
                    1};
    return rat_mul(a, b);
  }
  Scalar neg(const Scalar& a) const {
    if (p_) return Scalar{a.num == 0 ? 0 : p_ - a.num, 1};
    return Scalar{-a.num, a.den};
  }
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;

  std::string str(const Scalar& a) const;
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
  std::uint32_t p_;  // 0 means rationals

  Scalar rat_add(const Scalar& a, const Scalar& b) const;
  Scalar rat_sub(const Scalar& a, const Scalar& b) const;
  Scalar rat_mul(const Scalar& a, const Scalar& b) const;
  Scalar reduce(__int128 num, __int128 den) const;
};

bool is_prime_u32(std::uint32_t n);

}  // namespace qhom

#endif
