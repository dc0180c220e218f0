#pragma once

#include <map>
#include <utility>
#include <vector>

#include "polyform/form.hpp"
#include "polyform/rational.hpp"

namespace polyform {

// column index -> value; absent entries are zero.
using SparseVec = std::map<int, Rational>;

void subtract_scaled(SparseVec& a, const SparseVec& b, const Rational& c);

// Incremental exact Gaussian elimination over Q with provenance. Rows are fed
// one at a time. Every pivot row remembers which linear combination of the
// *input* rows it equals, so a dependent row comes back with the exact
// coefficients that express it in terms of earlier independent inputs. Ties
// are broken by feed order: a dependency never references an input that was
// itself dependent.
class Eliminator {
 public:
  struct AddResult {
    bool independent = false;
    // Filled for dependent rows: input index -> coefficient, with
    // input_row == sum combo[j] * input_j.
    std::map<int, Rational> combo;
  };

  AddResult add_row(const SparseVec& v);

  // Residual of v against the current pivots. If combo is non-null it gets
  // input-row coefficients with v == residual + sum combo[j] * input_j.
  SparseVec reduce(const SparseVec& v, std::map<int, Rational>* combo = nullptr) const;

  int rank() const { return static_cast<int>(pivots_.size()); }
  int rows_fed() const { return fed_; }

 private:
  struct PivotRow {
    SparseVec row;                  // leading (lowest-column) entry is 1
    std::map<int, Rational> prov;   // row == sum prov[j] * input_j
  };
  std::vector<PivotRow> pivots_;
  std::map<int, int> by_col_;       // pivot column -> index into pivots_
  int fed_ = 0;
};

// Stable assignment of dense column ids to (index set, monomial) slots, in
// first-seen order. Share one indexer across every vector that takes part in
// the same elimination.
class FormIndexer {
 public:
  int column(const IndexSet& I, const Monomial& m);
  SparseVec to_sparse(const Form& a);
  int columns() const { return static_cast<int>(ids_.size()); }

 private:
  std::map<std::pair<uint32_t, std::vector<int>>, int> ids_;
};

// Determinants of the leading principal submatrices, exact, via fraction-free
// elimination on the lcm-scaled integer matrix. Computation stops at the
// first zero minor (no pivoting is performed past it), so the result may be
// shorter than the matrix order; when it is, its last entry is that zero.
std::vector<Rational> leading_principal_minors(const std::vector<std::vector<Rational>>& M);

// Sylvester test: all leading principal minors positive. The input must be
// symmetric; anything else signals a consistency error since the callers all
// produce symmetric pairings.
bool is_positive_definite(const std::vector<std::vector<Rational>>& M);

}  // namespace polyform
