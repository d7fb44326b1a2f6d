#include "ribbons/bn.hpp"

#include <stdexcept>

namespace ribbons {

BNMatrix bn_matrix(const BundleDatum& l) {
  const int g = l.genus(), n = l.twist();
  if (n < 0 || n > g - 1) throw std::invalid_argument("twist must satisfy 0 <= n <= g-1");
  ExactMatrix m(l.field(), g - n, n + 1);
  for (int i = 1; i <= g - n; ++i)
    for (int j = 1; j <= n + 1; ++j)
      m.at(i - 1, j - 1) =
          l.coeff(i + j - 1) + Scalar::from_int(j - 1, l.field()) * l.ribbon().coeff(i + j - 2);
  return BNMatrix{std::move(m), l};
}

ProjBNMatrix proj_bn_matrix(const ProjBundlePoint& pt) {
  const int g = pt.ribbon().genus(), n = pt.twist();
  if (n < 0 || n > g - 1) throw std::invalid_argument("twist must satisfy 0 <= n <= g-1");
  const Field& f = pt.ribbon().field();
  auto g_coord = [&](int j) { return j >= 1 && j <= g ? pt.coord(j) : Scalar::zero(f); };
  ExactMatrix m(f, g - n, n + 1);
  for (int i = 1; i <= g - n; ++i)
    for (int j = 1; j <= n + 1; ++j)
      m.at(i - 1, j - 1) = g_coord(i + j - 1) + Scalar::from_int(j - 1, f) *
                                                    pt.ribbon().coeff(i + j - 2) * pt.coord(0);
  return ProjBNMatrix{std::move(m), pt};
}

bool in_w_locus(const BundleDatum& l, int r) {
  const int g = l.genus(), n = l.twist();
  if (r < 0 || r > n) throw std::invalid_argument("need 0 <= r <= n");
  if (2 * n > g - 1) throw std::invalid_argument("need 2n <= g-1");
  return rank_of(bn_matrix(l).mat) <= n - r;
}

CliffordReport clifford_report(const BundleDatum& l) {
  const int g = l.genus(), n = l.twist();
  if (n < 1 || n > g - 2) throw std::invalid_argument("need 1 <= n <= g-2");
  CliffordReport rep;
  rep.h0 = h0(l);
  rep.bound = n + 1;
  rep.equality = rep.h0 == rep.bound;
  rep.pullback_witness = l.ribbon().is_hyperelliptic() && l.gluing().is_zero();
  return rep;
}

}  // namespace ribbons
