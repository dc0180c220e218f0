#include "polyform/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "polyform/errors.hpp"

namespace polyform {

void subtract_scaled(SparseVec& a, const SparseVec& b, const Rational& c) {
  if (c == 0) return;
  for (const auto& [col, val] : b) {
    auto it = a.find(col);
    if (it == a.end()) {
      a.emplace(col, -c * val);
    } else {
      it->second -= c * val;
      if (it->second == 0) a.erase(it);
    }
  }
}

namespace {

void accumulate(std::map<int, Rational>& into, const std::map<int, Rational>& src,
                const Rational& c) {
  for (const auto& [j, val] : src) {
    auto it = into.find(j);
    if (it == into.end()) {
      into.emplace(j, c * val);
    } else {
      it->second += c * val;
      if (it->second == 0) into.erase(it);
    }
  }
}

}  // namespace

SparseVec Eliminator::reduce(const SparseVec& v, std::map<int, Rational>* combo) const {
  if (combo) combo->clear();
  SparseVec r = v;
  auto it = r.begin();
  while (it != r.end()) {
    auto p = by_col_.find(it->first);
    if (p == by_col_.end()) {
      ++it;
      continue;
    }
    const int col = it->first;
    const Rational c = it->second;
    const PivotRow& pr = pivots_[p->second];
    subtract_scaled(r, pr.row, c);  // cancels r[col] exactly; touches cols >= col only
    if (combo) accumulate(*combo, pr.prov, c);
    it = r.lower_bound(col);
  }
  return r;
}

Eliminator::AddResult Eliminator::add_row(const SparseVec& v) {
  const int input_index = fed_++;
  AddResult res;
  SparseVec r = reduce(v, &res.combo);
  if (r.empty()) {
    res.independent = false;
    return res;
  }
  // residual = input - sum combo[j] * input_j, so the new pivot's provenance
  // is e_{input} minus the accumulated combination.
  PivotRow pr;
  std::map<int, Rational> prov;
  prov.emplace(input_index, Rational(1));
  for (const auto& [j, c] : res.combo) prov[j] = -c;
  const Rational lead = r.begin()->second;
  for (auto& [col, val] : r) val /= lead;
  for (auto it = prov.begin(); it != prov.end();) {
    it->second /= lead;
    if (it->second == 0)
      it = prov.erase(it);
    else
      ++it;
  }
  const int pivot_col = r.begin()->first;
  pr.row = std::move(r);
  pr.prov = std::move(prov);
  by_col_.emplace(pivot_col, static_cast<int>(pivots_.size()));
  pivots_.push_back(std::move(pr));
  res.independent = true;
  res.combo.clear();
  return res;
}

int FormIndexer::column(const IndexSet& I, const Monomial& m) {
  auto key = std::make_pair(I.bits(), m.exponents());
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  const int id = static_cast<int>(ids_.size());
  ids_.emplace(std::move(key), id);
  return id;
}

SparseVec FormIndexer::to_sparse(const Form& a) {
  SparseVec v;
  for (const auto& [I, p] : a.coeffs())
    for (const auto& [m, c] : p.terms()) v.emplace(column(I, m), c);
  return v;
}

std::vector<Rational> leading_principal_minors(const std::vector<std::vector<Rational>>& M) {
  const int k = static_cast<int>(M.size());
  std::vector<Rational> minors;
  if (k == 0) return minors;
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != k)
      throw DimensionError("minor computation needs a square matrix");

  // Scale to integers: det(M_i) = det(A_i) / L^i with A = L * M.
  Int L = 1;
  for (const auto& row : M)
    for (const auto& x : row) L = boost::multiprecision::lcm(L, Int(denominator(x)));
  std::vector<std::vector<Int>> A(k, std::vector<Int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rational s = M[i][j] * Rational(L);
      A[i][j] = Int(numerator(s));  // exact by construction of L
    }

  // Fraction-free elimination: after step s the entry A[s][s] equals the
  // determinant of the leading (s+1) x (s+1) block of A.
  Int prev = 1;
  Int Lpow = 1;
  for (int s = 0; s < k; ++s) {
    Lpow *= L;
    minors.push_back(make_rational(A[s][s], Lpow));
    if (A[s][s] == 0) break;  // cannot divide by this pivot; stop here
    for (int i = s + 1; i < k; ++i)
      for (int j = s + 1; j < k; ++j)
        A[i][j] = (A[s][s] * A[i][j] - A[i][s] * A[s][j]) / prev;
    prev = A[s][s];
  }
  return minors;
}

bool is_positive_definite(const std::vector<std::vector<Rational>>& M) {
  const int k = static_cast<int>(M.size());
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(M[i].size()) != k)
      throw ConsistencyError("pairing matrix is not square");
    for (int j = i + 1; j < k; ++j)
      if (M[i][j] != M[j][i]) throw ConsistencyError("pairing matrix is not symmetric");
  }
  auto minors = leading_principal_minors(M);
  if (static_cast<int>(minors.size()) < k) return false;
  for (const auto& m : minors)
    if (!(m > 0)) return false;
  return true;
}

}  // namespace polyform
