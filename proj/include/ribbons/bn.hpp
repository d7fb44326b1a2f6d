#ifndef RIBBONS_BN_HPP
#define RIBBONS_BN_HPP

#include "ribbons/matrix.hpp"
#include "ribbons/ribbon.hpp"
#include "ribbons/sections.hpp"

namespace ribbons {

// The (g-n) x (n+1) Brill-Noether matrix of a bundle: entry (i, j), 1-based,
// is G_{i+j-1} + (j-1) F_{i+j-2}, with coefficients zero outside their
// declared ranges. Its kernel vectors are exactly the coefficient vectors of
// degree <= n polynomials annihilated by the delta operator.
struct BNMatrix {
  ExactMatrix mat;
  BundleDatum bundle;
};

// Requires 0 <= n <= g-1 so the shape is nonempty.
BNMatrix bn_matrix(const BundleDatum& l);

// Projective variant: entry (i, j) is G_{i+j-1} + (j-1) F_{i+j-2} G_0.
// The G_0 = 1 chart reproduces bn_matrix; G_0 = 0 degenerates to a
// Catalecticant (Hankel) matrix.
struct ProjBNMatrix {
  ExactMatrix mat;
  ProjBundlePoint point;
};

ProjBNMatrix proj_bn_matrix(const ProjBundlePoint& pt);

// Membership in the special locus W^r_{2n}: rank <= n - r, equivalently
// h^0 >= r+1. Requires 0 <= r <= n and 2n <= g-1.
bool in_w_locus(const BundleDatum& l, int r);

struct CliffordReport {
  int h0 = 0;
  int bound = 0;  // n + 1
  bool equality = false;
  bool pullback_witness = false;  // F == 0 and G == 0
};

// Section bound h^0 <= n+1 for 1 <= n <= g-2; equality forces the split
// ribbon with the pullback bundle.
CliffordReport clifford_report(const BundleDatum& l);

}  // namespace ribbons

#endif
