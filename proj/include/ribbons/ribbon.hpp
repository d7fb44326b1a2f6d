#ifndef RIBBONS_RIBBON_HPP
#define RIBBONS_RIBBON_HPP

#include <vector>

#include "ribbons/laurent.hpp"

namespace ribbons {

// Gluing datum of a genus-g double structure on the projective line, held as
// the canonical window representative F = F_1 t^-1 + ... + F_{g-2} t^-(g-2).
// F = 0 is the split (hyperelliptic) case.
class RibbonDatum {
 public:
  RibbonDatum(int genus, const LaurentPoly& gluing_raw);

  int genus() const { return g_; }
  const Field& field() const { return f_.field(); }
  const LaurentPoly& gluing() const { return f_; }

  Scalar coeff(int i) const { return f_.coeff(-i); }  // F_i, zero outside [1, g-2]
  std::vector<Scalar> coeff_list() const { return f_.negative_coeffs(g_ - 2); }

  bool is_hyperelliptic() const { return f_.is_zero(); }

  bool operator==(const RibbonDatum& o) const { return g_ == o.g_ && f_ == o.f_; }
  bool operator!=(const RibbonDatum& o) const { return !(*this == o); }

 private:
  int g_;
  LaurentPoly f_;
};

// Same ribbon after the coordinate change s -> s + p(s)e, t -> t + q(t)h.
// The correction terms land outside the window, so the canonical datum is
// unchanged; the computation is done anyway rather than short-circuited.
RibbonDatum reparameterized(const RibbonDatum& r, const LaurentPoly& p, const LaurentPoly& q);

// True iff the gluing data agree up to one nonzero scalar (split == split).
bool isomorphic_over_p1(const RibbonDatum& a, const RibbonDatum& b);

// Degree-2n line bundle on a ribbon: twist n plus the canonical window
// representative G = G_1 t^-1 + ... + G_g t^-g.
class BundleDatum {
 public:
  BundleDatum(RibbonDatum ribbon, int n, const LaurentPoly& gluing_raw);

  const RibbonDatum& ribbon() const { return ribbon_; }
  const Field& field() const { return g_.field(); }
  int genus() const { return ribbon_.genus(); }
  int twist() const { return n_; }
  int degree() const { return 2 * n_; }
  const LaurentPoly& gluing() const { return g_; }

  Scalar coeff(int j) const { return g_.coeff(-j); }  // G_j, zero outside [1, g]
  std::vector<Scalar> coeff_list() const { return g_.negative_coeffs(ribbon_.genus()); }

  bool operator==(const BundleDatum& o) const {
    return ribbon_ == o.ribbon_ && n_ == o.n_ && g_ == o.g_;
  }

 private:
  RibbonDatum ribbon_;
  int n_;
  LaurentPoly g_;
};

// Transition rescaling by (1+m(s)e) and (1+nn(t)h); fixes the Picard class.
BundleDatum twisted(const BundleDatum& l, const LaurentPoly& m, const LaurentPoly& nn);

// Product of transition data: twists add, G classes add.
BundleDatum tensor_product(const BundleDatum& a, const BundleDatum& b);

// Point [G_0 : G_1 : ... : G_g] of the projective closure of the G-space.
class ProjBundlePoint {
 public:
  ProjBundlePoint(RibbonDatum ribbon, int n, std::vector<Scalar> coords);

  const RibbonDatum& ribbon() const { return ribbon_; }
  int twist() const { return n_; }
  const std::vector<Scalar>& coords() const { return coords_; }  // G_0..G_g
  const Scalar& coord(int j) const { return coords_[j]; }

  // chart G_0 != 0, rescaled to G_0 = 1
  BundleDatum affine_chart() const;

 private:
  RibbonDatum ribbon_;
  int n_;
  std::vector<Scalar> coords_;
};

}  // namespace ribbons

#endif
