#ifndef RIBBONS_LOCI_HPP
#define RIBBONS_LOCI_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ribbons/bn.hpp"
#include "ribbons/matrix.hpp"
#include "ribbons/ribbon.hpp"

namespace ribbons {

// expected dimension g - (r+1)(g - 2n + r) of the special locus
int brill_noether_rho(int g, int n, int r);

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ExecPolicy {
  unsigned threads = 1;
};

// Which rank-drop locus to study. Fixed-F kinds carry rational F
// coefficients so the same ribbon reduces consistently across primes.
struct LocusSpec {
  enum class Kind {
    AffineW,            // (G_1..G_g), F fixed
    ProjectiveBW,       // [G_0 : G_1 : ... : G_g], F fixed
    ProjectiveBWSlice,  // the G_0 = 0 hyperplane of the above
    GlobalW,            // (G_1..G_g ; F_1..F_{g-2}) with F varying
  };

  Kind kind = Kind::AffineW;
  int g = 0, n = 0, r = 0;
  std::vector<Scalar> f_coeffs;  // rational F_1..F_{g-2}; ignored for GlobalW

  int ambient_dim() const;  // affine dimension of the variable space
  void validate() const;
  static std::string kind_name(Kind k);
};

struct CountMode {
  enum class Kind { Exhaustive, MonteCarlo };
  Kind kind = Kind::Exhaustive;
  uint64_t samples = 0;  // Monte Carlo only
  uint64_t seed = 0;

  static CountMode exhaustive() { return CountMode{}; }
  static CountMode monte_carlo(uint64_t samples, uint64_t seed) {
    return CountMode{Kind::MonteCarlo, samples, seed};
  }
};

struct PointCount {
  uint64_t prime = 0;
  bool exact = true;
  uint64_t count = 0;              // exhaustive result
  uint64_t samples = 0, hits = 0;  // Monte Carlo result
  double log_ambient = 0.0;        // ln of the ambient point count
  uint64_t seed = 0;

  // exact count, or the extrapolated Monte Carlo estimate
  double value() const;
};

// Number of F_p points satisfying rank <= n - r. Exhaustive mode refuses to
// enumerate more than `budget` tuples (BudgetExceeded).
PointCount count_points(const LocusSpec& spec, uint64_t prime, const CountMode& mode,
                        uint64_t budget, const ExecPolicy& exec = {});

struct FitResult {
  bool empty = false;       // a zero count was seen: no dimension to fit
  bool conclusive = false;  // |residual| <= 0.5 and counts were usable
  int dim = 0;
  double slope = 0.0;
  double residual = 0.0;
};

// Log-ratio slope through the counts at the two largest primes, rounded to
// the nearest integer. Needs at least two primes.
FitResult fit_dimension(const std::vector<PointCount>& counts);

// Dimension of the Zariski tangent space at a point of the smooth stratum
// (rank exactly n - r), via the Jacobian of all (n-r+1)-minors. The point
// lists the variable values: G for AffineW, (G, F) for GlobalW.
// Throws std::domain_error when the point has rank < n - r.
int tangent_dim(const LocusSpec& spec, const std::vector<Scalar>& point);

// Linear constraints on (G_1..G_g) forcing every given coefficient vector
// into the kernel of the Brill-Noether matrix; one solution or nullopt.
std::optional<std::vector<Scalar>> solve_section_constraints(
    const RibbonDatum& ribbon, int n, const std::vector<std::vector<Scalar>>& kernel_vectors);

struct SampleOutcome {
  std::optional<BundleDatum> bundle;
  int draws = 0;
  int dependent = 0;     // draws rejected: dependent coefficient vectors
  int inconsistent = 0;  // draws rejected: unsolvable constraints
};

// Constructive search for a bundle with h^0 >= r+1: draw r+1 independent
// coefficient vectors, solve the linear constraints on G, verify membership.
SampleOutcome sample_w_point(const RibbonDatum& ribbon, int n, int r, uint64_t seed,
                             int max_draws = 100);

// A linear space of (rows x cols) matrices whose entries are linear forms in
// nvars variables; coeff[(i*cols + j)*nvars + v] is the v-coefficient of
// entry (i, j).
struct FormSpace {
  Field field;
  int rows = 0, cols = 0, nvars = 0;
  std::vector<Scalar> coeff;
  std::string name;

  const Scalar& entry_coeff(int i, int j, int v) const {
    return coeff[(static_cast<size_t>(i) * cols + j) * nvars + v];
  }
  // coefficient vector of a^T M b as a linear form
  std::vector<Scalar> generalized_form(const std::vector<Scalar>& a,
                                       const std::vector<Scalar>& b) const;
  // numeric matrix at a variable assignment
  ExactMatrix instantiate(const std::vector<Scalar>& values) const;
};

FormSpace catalecticant_space(const Field& f, int g, int n);  // entries G_{i+j-1}
FormSpace bn_form_space(const Field& f, int g, int n);  // entries G_{i+j-1} + (j-1)F_{i+j-2}

struct GenericityOptions {
  uint64_t trials = 100000;  // randomized fallback
  uint64_t seed = 0;
  uint64_t budget = 2000000;  // max enumerated configurations
  unsigned threads = 1;
};

struct GenericityVerdict {
  enum class Kind { CertifiedExhaustive, NoCounterexampleFound, Counterexample };
  Kind kind = Kind::NoCounterexampleFound;
  uint64_t inspected = 0;
  // witness: one generalized entry for m = 1, an admissible pair for m = 2
  std::vector<Scalar> a1, b1, a2, b2;
};

// m = 1: look for a zero generalized entry a^T M b. m = 2: look for an
// admissible pair of generalized entries whose linear forms are dependent.
// Fully enumerated searches certify; otherwise the verdict only records the
// absence of a counterexample among the inspected configurations. Witnesses
// are re-verified by direct evaluation before being returned.
GenericityVerdict genericity_check(const FormSpace& space, int m, const GenericityOptions& opt);

struct DimensionReport {
  LocusSpec spec;
  std::vector<PointCount> counts;
  FitResult fit;
  std::vector<std::pair<std::vector<Scalar>, int>> tangents;  // (point, local dim)
  std::string notes;
  uint64_t seed = 0;
};

// Counts at each prime with the requested mode, the fitted dimension, and,
// for the affine kinds, the tangent dimension at a sampled smooth point.
DimensionReport dimension_report(const LocusSpec& spec, const std::vector<uint64_t>& primes,
                                 const CountMode& mode, uint64_t budget,
                                 const ExecPolicy& exec = {});

struct SurveyParams {
  int g_lo = 5, g_hi = 5;
  int n = 2, r = 1;
  std::vector<uint64_t> primes{3, 5};
  uint64_t budget = 2000000;
  uint64_t seed = 0;
  int random_ribbons = 2;
  uint64_t mc_samples = 20000;
  unsigned threads = 1;
};

struct SurveyRow {
  int g = 0, n = 0, r = 0;
  std::string f_id;
  uint64_t prime = 0;
  PointCount pc;
  std::optional<int> fitted_dim;
  double residual = 0.0;
  std::optional<int> tangent;
  int rho = 0;
  int expected_dim = 0;  // rho, 2n-2r (split baseline) or 2n-2r-1 (G_0=0 slice)
  std::string verdict;   // empty | dim=expected | dim>expected | dim<expected | inconclusive | error
};

// Per-genus experiment: the split baseline, its projective G_0 = 0 slice,
// and a few random ribbons; counts, fitted dimensions, tangent dimensions at
// sampled points, and verdicts against the expected dimensions.
std::vector<SurveyRow> bn_survey(const SurveyParams& params);

// Diagnostic with no verification weight: number of connected components of
// the locus points under one-coordinate moves.
uint64_t component_count(const LocusSpec& spec, uint64_t prime, uint64_t budget);

}  // namespace ribbons

#endif
