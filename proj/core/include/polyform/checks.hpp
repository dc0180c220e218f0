#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyform/basis.hpp"
#include "polyform/integrate.hpp"

namespace polyform {

// Outcome of one executable check. A fail verdict always carries a witness:
// the offending form when one exists, and a text note naming the violated
// condition either way.
struct VerificationReport {
  std::string check_name;
  std::string parameters;
  bool pass = false;
  std::optional<Form> witness_form;
  std::string witness_text;
  double seconds = 0.0;

  const char* verdict() const { return pass ? "pass" : "fail"; }
};

// The four correspondences between simplex and sphere families, `which` in
// 1..4. Verifies membership of every pulled-back basis element in the
// independently constructed right-hand space, injectivity (rank of the
// image family), and equality of dimensions.
VerificationReport check_tsiso(int n, int r, int k, int which);

// The parity laws: conormal wedge and radial contraction preserve even and
// odd parts; both Hodge stars and bubble multiplication interchange them.
// Asserted exactly on `trials` seeded pseudorandom forms.
VerificationReport check_parity_laws(int n, int trials, unsigned seed = 2026u);

// The trimmed family built as a radial contraction image coincides with the
// classical degree-(r-1)-plus-Koszul description on the simplex.
VerificationReport check_pm_equivalence(int n, int r, int k);

// Two facts about the extended Hodge star: the contraction identity
// i_U(*a) = *(a ^ nu) over the full monomial basis of degree <= 2, and
// agreement with a frame-by-frame hyperplane star at rational sphere points.
VerificationReport check_appendix_b(int n);

// The kernel of i_U on P_s Lambda^k equals the trimmed subfamily for k >= 1
// and the whole space for k = 0.
VerificationReport check_pmker(int n, int s, int k);

// Divisibility by the bubble: the double-ring ambient space computed
// directly from the vanishing conditions equals the bubble-multiple
// description, and every element's quotient lands in the stated space.
VerificationReport check_ringring_divisibility(int n, int s, int k, bool minus);

// Sharpness of the extension degree bound: the volume class times the bubble
// lives on the sphere at degree n but admits no ambient double-ring
// extension at that degree.
VerificationReport check_no_extension_example(int n);

// The worked end-to-end duality examples, exact at every intermediate stage,
// including inverse round trips and the 1/60 pairing value.
VerificationReport check_worked_examples(int n);

// One row of the dimension table. dim comes from the symbolic basis,
// formula_dim from the classical closed form (-1 when none applies), and
// oracle_dim from the point-evaluation rank of the generating family.
struct DimRow {
  Flavor flavor;
  Space context;
  int r = 0;
  int k = 0;
  long dim = 0;
  long formula_dim = -1;
  long oracle_dim = 0;

  bool clean() const {
    return oracle_dim == dim && (formula_dim < 0 || formula_dim == dim);
  }
};

using DimTable = std::vector<DimRow>;

// All flavors in their home contexts (simplex and sphere), all k, r up to
// r_max. Discrepancies are recorded in the rows, never suppressed.
DimTable dim_table(int n, int r_max);

bool dim_table_clean(const DimTable& table);

// Rank of the family under exact evaluation at sample points of the
// manifold, on k-fold tangent frames. A lower bound on the true rank
// modulo the ideal; the sample is grown until the rank stabilizes.
int evaluation_rank(const std::vector<Form>& family, int k,
                    const QuotientContext& ctx);

// Named check suites runnable from the command line.
const std::vector<std::string>& suite_names();

// Reports for one suite at a given n; "all" concatenates every suite.
std::vector<VerificationReport> run_suite(const std::string& suite, int n);

}  // namespace polyform
