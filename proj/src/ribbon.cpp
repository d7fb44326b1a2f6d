#include "ribbons/ribbon.hpp"

#include <stdexcept>

namespace ribbons {

namespace {

LaurentPoly canonical_gluing(int genus, const LaurentPoly& raw) {
  if (genus < 3) throw std::invalid_argument("genus must be at least 3");
  return raw.window(-(genus - 2), -1);
}

}  // namespace

RibbonDatum::RibbonDatum(int genus, const LaurentPoly& gluing_raw)
    : g_(genus), f_(canonical_gluing(genus, gluing_raw)) {}

RibbonDatum reparameterized(const RibbonDatum& r, const LaurentPoly& p, const LaurentPoly& q) {
  if (!p.is_polynomial() || !q.is_polynomial())
    throw std::invalid_argument("coordinate changes take polynomials");
  const int g = r.genus();
  // F(t) + q(t) - t^{1-g} p(t^{-1})
  const LaurentPoly corrected = r.gluing() + q - p.inverted().shifted(1 - g);
  return RibbonDatum(g, corrected);
}

bool isomorphic_over_p1(const RibbonDatum& a, const RibbonDatum& b) {
  if (a.genus() != b.genus()) throw std::invalid_argument("genus mismatch");
  if (a.field() != b.field()) throw std::invalid_argument("field mismatch");
  const bool az = a.is_hyperelliptic(), bz = b.is_hyperelliptic();
  if (az || bz) return az == bz;
  const auto& ta = a.gluing().terms();
  const auto& tb = b.gluing().terms();
  if (ta.size() != tb.size()) return false;
  // proportionality: identical support, one ratio
  auto itb = tb.begin();
  for (auto ita = ta.begin(); ita != ta.end(); ++ita, ++itb)
    if (ita->first != itb->first) return false;
  const Scalar ratio = ta.begin()->second / tb.begin()->second;
  itb = tb.begin();
  for (auto ita = ta.begin(); ita != ta.end(); ++ita, ++itb)
    if (ita->second != itb->second * ratio) return false;
  return true;
}

BundleDatum::BundleDatum(RibbonDatum ribbon, int n, const LaurentPoly& gluing_raw)
    : ribbon_(std::move(ribbon)), n_(n),
      g_(gluing_raw.window(-ribbon_.genus(), -1)) {
  if (g_.field() != ribbon_.field()) throw std::invalid_argument("field mismatch");
}

BundleDatum twisted(const BundleDatum& l, const LaurentPoly& m, const LaurentPoly& nn) {
  if (!m.is_polynomial() || !nn.is_polynomial())
    throw std::invalid_argument("twists take polynomials");
  const int g = l.genus();
  // G - m(t^{-1}) t^{-g-1} + nn(t)
  const LaurentPoly corrected = l.gluing() - m.inverted().shifted(-g - 1) + nn;
  return BundleDatum(l.ribbon(), l.twist(), corrected);
}

BundleDatum tensor_product(const BundleDatum& a, const BundleDatum& b) {
  if (a.ribbon() != b.ribbon()) throw std::invalid_argument("bundles live on different ribbons");
  return BundleDatum(a.ribbon(), a.twist() + b.twist(), a.gluing() + b.gluing());
}

ProjBundlePoint::ProjBundlePoint(RibbonDatum ribbon, int n, std::vector<Scalar> coords)
    : ribbon_(std::move(ribbon)), n_(n), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != ribbon_.genus() + 1)
    throw std::invalid_argument("expected g+1 projective coordinates");
  bool all_zero = true;
  for (const auto& c : coords_) {
    if (c.field() != ribbon_.field()) throw std::invalid_argument("field mismatch");
    all_zero = all_zero && c.is_zero();
  }
  if (all_zero) throw std::invalid_argument("projective point needs a nonzero coordinate");
}

BundleDatum ProjBundlePoint::affine_chart() const {
  if (coords_[0].is_zero()) throw std::domain_error("point lies in the G_0 = 0 hyperplane");
  const Scalar inv = coords_[0].inverse();
  LaurentPoly g(ribbon_.field());
  for (int j = 1; j < static_cast<int>(coords_.size()); ++j)
    g.add_term(-j, coords_[j] * inv);
  return BundleDatum(ribbon_, n_, g);
}

}  // namespace ribbons
