#ifndef RIBBONS_FIELD_HPP
#define RIBBONS_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace ribbons {

bool is_prime_u64(uint64_t n);

// Coefficient field: exact rationals or a prime field F_p.
// characteristic() == 0 marks the rationals.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(uint64_t p);  // throws std::invalid_argument unless p is prime

  bool is_rationals() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  uint64_t characteristic() const { return p_; }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  std::string str() const;                      // "Q" or "F_p"
  static Field parse(const std::string& text);  // "q" | "fp:<p>"

 private:
  explicit Field(uint64_t p) : p_(p) {}
  uint64_t p_;
};

// An exact field element. Rationals are GMP mpq in canonical form;
// prime-field values are canonical residues in [0, p).
class Scalar {
 public:
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(long long v, const Field& f);
  static Scalar rational(mpq_class q);                // field is Q
  static Scalar residue(uint64_t v, const Field& f);  // reduces mod p

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws std::domain_error on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text form: "a", "a/b" over Q; the residue over F_p.
  std::string str() const;
  static Scalar parse(const std::string& text, const Field& f);

  const mpq_class& rat() const;  // rationals only
  uint64_t res() const;          // prime fields only

 private:
  Scalar(Field f, std::variant<uint64_t, mpq_class> v)
      : field_(f), v_(std::move(v)) {}
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::variant<uint64_t, mpq_class> v_;
};

// Image of a rational scalar in F_p. Throws std::domain_error when the
// denominator vanishes mod p.
Scalar reduce_mod(const Scalar& rational_value, const Field& fp);

}  // namespace ribbons

#endif
