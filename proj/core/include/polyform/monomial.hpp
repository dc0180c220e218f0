#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "polyform/errors.hpp"

namespace polyform {

// Exponent vector over a fixed set of variables. Variables are numbered
// 1..nvars in the public interface throughout the library.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(check_nvars(nvars), 0) {}
  Monomial(std::initializer_list<int> exps) : e_(exps) {
    check_nvars(static_cast<int>(e_.size()));
    for (int v : e_)
      if (v < 0) throw DimensionError("Monomial: negative exponent");
  }
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    check_nvars(static_cast<int>(e_.size()));
    for (int v : e_)
      if (v < 0) throw DimensionError("Monomial: negative exponent");
  }

  static Monomial unit(int nvars, int var, int exp = 1) {
    Monomial m(nvars);
    m.e_.at(var - 1) = exp;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exponent(int var) const { return e_.at(var - 1); }
  const std::vector<int>& exponents() const { return e_; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    require_same_nvars(o);
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    require_same_nvars(o);
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // *this / o; exponents must not go negative.
  Monomial divide_by(const Monomial& o) const {
    require_same_nvars(o);
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) throw DivisibilityError("Monomial: not divisible");
    }
    return r;
  }

  Monomial with_exponent(int var, int exp) const {
    Monomial r = *this;
    r.e_.at(var - 1) = exp;
    return r;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  static int check_nvars(int n) {
    if (n < 1) throw DimensionError("Monomial: need at least one variable");
    return n;
  }
  void require_same_nvars(const Monomial& o) const {
    if (o.nvars() != nvars()) throw DimensionError("Monomial: variable count mismatch");
  }

  std::vector<int> e_;
};

// Graded lexicographic order arranged so that map iteration visits terms in
// display order: higher total degree first, ties broken with x1 dominant.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  }
};

}  // namespace polyform
