#ifndef RIBBONS_LAURENT_HPP
#define RIBBONS_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbons/field.hpp"

namespace ribbons {

// Sparse Laurent polynomial: a finite exponent -> coefficient map with no
// stored zeros. The empty map is the canonical zero.
class LaurentPoly {
 public:
  explicit LaurentPoly(Field f) : field_(f) {}

  static LaurentPoly monomial(const Field& f, int exp, const Scalar& c);
  // c[i] is the coefficient of t^{-(i+1)}: builds c_1 t^-1 + ... + c_k t^-k.
  static LaurentPoly from_negative_coeffs(const Field& f, const std::vector<Scalar>& c);
  // c[i] is the coefficient of t^i: builds an ordinary polynomial.
  static LaurentPoly from_poly_coeffs(const Field& f, const std::vector<Scalar>& c);

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Scalar>& terms() const { return terms_; }

  Scalar coeff(int exp) const;
  void add_term(int exp, const Scalar& c);  // accumulates, erases on cancel

  std::optional<int> min_exp() const;
  std::optional<int> max_exp() const;
  // max exponent of a polynomial; zero counts as degree < 0 via nullopt
  std::optional<int> degree() const { return max_exp(); }
  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Scalar& c) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // term-by-term power rule; exponent-0 terms vanish
  LaurentPoly derivative() const;

  // canonical representative in the quotient killing exponents outside
  // [lo, hi]; requires lo <= hi
  LaurentPoly window(int lo, int hi) const;
  LaurentPoly polynomial_part() const;  // keeps exponents >= 0

  LaurentPoly inverted() const;      // t -> t^{-1}
  LaurentPoly shifted(int k) const;  // multiply by t^k

  // coefficients of t^{-1}..t^{-len} as a dense list
  std::vector<Scalar> negative_coeffs(int len) const;
  // dense ascending coefficients a_0..a_deg; requires a polynomial
  std::vector<Scalar> poly_coeffs() const;

  std::string str() const;

 private:
  Field field_;
  std::map<int, Scalar> terms_;
};

}  // namespace ribbons

#endif
