#include "ribbons/sections.hpp"

#include <stdexcept>

namespace ribbons {

namespace {

LaurentPoly transition_product(const BundleDatum& l, const LaurentPoly& p) {
  return p.derivative() * l.ribbon().gluing() + p * l.gluing();
}

}  // namespace

LaurentPoly delta_op(const BundleDatum& l, const LaurentPoly& p) {
  if (!p.is_polynomial()) throw std::invalid_argument("delta takes polynomials");
  if (p.degree().value_or(-1) > l.twist())
    throw std::invalid_argument("polynomial degree exceeds the twist");
  const int g = l.genus(), n = l.twist();
  if (n >= g) return LaurentPoly(l.field());  // empty window
  return (-transition_product(l, p)).window(n - g, -1);
}

ExactMatrix delta_matrix(const BundleDatum& l) {
  const int g = l.genus(), n = l.twist();
  if (n < 0) throw std::invalid_argument("twist must be nonnegative");
  const int rows = g - n > 0 ? g - n : 0;
  ExactMatrix m(l.field(), rows, n + 1);
  for (int j = 0; j <= n; ++j) {
    const LaurentPoly mono = LaurentPoly::monomial(l.field(), j, Scalar::one(l.field()));
    const LaurentPoly d = delta_op(l, mono);
    for (int row = 1; row <= rows; ++row) m.at(row - 1, j) = -d.coeff(-row);
  }
  return m;
}

SectionBasis section_basis(const BundleDatum& l) {
  const int g = l.genus(), n = l.twist();
  SectionBasis basis;
  if (n < 0) return basis;
  for (int k = 0; k <= n - g - 1; ++k) basis.eta_exponents.push_back(k);
  const auto rk = rank_and_kernel(delta_matrix(l));
  for (const auto& v : rk.kernel) {
    const LaurentPoly p = LaurentPoly::from_poly_coeffs(l.field(), v);
    basis.pairs.emplace_back(p, transition_product(l, p).polynomial_part());
  }
  return basis;
}

int h0(const BundleDatum& l) {
  const int n = l.twist(), g = l.genus();
  if (n < 0) return 0;
  const int eta_dim = n - g > 0 ? n - g : 0;
  return eta_dim + (n + 1) - rank_of(delta_matrix(l));
}

}  // namespace ribbons
