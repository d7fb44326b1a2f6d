#ifndef RIBBONS_SECTIONS_HPP
#define RIBBONS_SECTIONS_HPP

#include <utility>
#include <vector>

#include "ribbons/matrix.hpp"
#include "ribbons/ribbon.hpp"

namespace ribbons {

// Basis of H^0(L) in the gluing chart: nilpotent monomials t^k h for
// 0 <= k <= n-g-1, plus pairs (p, p_1) where p spans the kernel of the
// delta operator and p_1 is the polynomial part of p'F + pG.
struct SectionBasis {
  std::vector<int> eta_exponents;
  std::vector<std::pair<LaurentPoly, LaurentPoly>> pairs;

  int dimension() const {
    return static_cast<int>(eta_exponents.size() + pairs.size());
  }
};

// delta(p) = -(p'F + pG) reduced to the exponent window [n-g, -1].
// Throws when p is not a polynomial of degree <= n; the empty window
// (n >= g) gives zero.
LaurentPoly delta_op(const BundleDatum& l, const LaurentPoly& p);

// Matrix of p |-> -delta(p) in the bases (1, t, ..., t^n) and
// (t^-1, ..., t^-(g-n)), assembled by evaluating the operator on monomials.
// Shape (g-n) x (n+1), with zero rows clipped to 0 when n >= g.
ExactMatrix delta_matrix(const BundleDatum& l);

SectionBasis section_basis(const BundleDatum& l);

// dim H^0(L) = max(n-g, 0) + dim ker(delta); zero for n < 0.
int h0(const BundleDatum& l);

}  // namespace ribbons

#endif
