#include "ribbons/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ribbons {

LaurentPoly LaurentPoly::monomial(const Field& f, int exp, const Scalar& c) {
  LaurentPoly p(f);
  p.add_term(exp, c);
  return p;
}

LaurentPoly LaurentPoly::from_negative_coeffs(const Field& f, const std::vector<Scalar>& c) {
  LaurentPoly p(f);
  for (size_t i = 0; i < c.size(); ++i) p.add_term(-static_cast<int>(i) - 1, c[i]);
  return p;
}

LaurentPoly LaurentPoly::from_poly_coeffs(const Field& f, const std::vector<Scalar>& c) {
  LaurentPoly p(f);
  for (size_t i = 0; i < c.size(); ++i) p.add_term(static_cast<int>(i), c[i]);
  return p;
}

Scalar LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void LaurentPoly::add_term(int exp, const Scalar& c) {
  if (c.field() != field_) throw std::invalid_argument("coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<int> LaurentPoly::min_exp() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exp() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomial field mismatch");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomial field mismatch");
  LaurentPoly r(field_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
  LaurentPoly r(field_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(field_);
  for (const auto& [e, v] : terms_) r.add_term(e, -v);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomial field mismatch");
  return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r(field_);
  for (const auto& [e, v] : terms_) {
    if (e == 0) continue;
    r.add_term(e - 1, v * Scalar::from_int(e, field_));
  }
  return r;
}

LaurentPoly LaurentPoly::window(int lo, int hi) const {
  if (lo > hi) throw std::invalid_argument("window requires lo <= hi");
  LaurentPoly r(field_);
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it)
    r.terms_.emplace(it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::polynomial_part() const {
  LaurentPoly r(field_);
  for (auto it = terms_.lower_bound(0); it != terms_.end(); ++it)
    r.terms_.emplace(it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly r(field_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(-e, v);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(field_);
  for (const auto& [e, v] : terms_) r.terms_.emplace(e + k, v);
  return r;
}

std::vector<Scalar> LaurentPoly::negative_coeffs(int len) const {
  std::vector<Scalar> out;
  out.reserve(len);
  for (int i = 1; i <= len; ++i) out.push_back(coeff(-i));
  return out;
}

std::vector<Scalar> LaurentPoly::poly_coeffs() const {
  if (!is_polynomial()) throw std::invalid_argument("negative exponents present");
  const int deg = max_exp().value_or(-1);
  std::vector<Scalar> out;
  out.reserve(deg + 1);
  for (int i = 0; i <= deg; ++i) out.push_back(coeff(i));
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high to low, the usual reading order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->first == 0) {
      os << it->second.str();
    } else {
      if (!it->second.is_one()) os << it->second.str() << "*";
      os << "t^" << it->first;
    }
  }
  return os.str();
}

}  // namespace ribbons
