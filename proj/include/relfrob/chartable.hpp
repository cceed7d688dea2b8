#pragma once

#include <vector>

#include "relfrob/cyclotomic.hpp"
#include "relfrob/gset.hpp"

namespace relfrob {

/// Function on conjugacy classes with exact cyclotomic values.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  unsigned size() const { return static_cast<unsigned>(values_.size()); }
  const Cyclotomic& at(unsigned cls) const { return values_[cls]; }
  const Cyclotomic& at_element(Elt g) const {
    return values_[group_->conjugacy().class_of[g]];
  }
  const std::vector<Cyclotomic>& values() const { return values_; }

  ClassFunction conj() const;
  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& s);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// Class-algebra structure constants N_{i,j,k} = #{(u,v) in C_i x C_j :
/// uv = z_k} for the fixed representative z_k. Slices over (i,j) are
/// computed per target class and cached.
class ClassAlgebra {
 public:
  explicit ClassAlgebra(GroupPtr group);
  unsigned num_classes() const { return r_; }
  /// Row-major r x r slice for fixed k: slice(k)[i*r + j] = N_{i,j,k}.
  const std::vector<std::uint64_t>& slice(unsigned k) const;

 private:
  GroupPtr group_;
  unsigned r_;
  mutable std::vector<std::vector<std::uint64_t>> slices_;
};

/// Exact irreducible character table, computed with the
/// Burnside-Dixon-Schneider method: simultaneous eigenvectors of the class
/// matrices over a finite field F_p (p = 1 mod exponent, p > 2*sqrt|G|),
/// degrees recovered from orthogonality, and values lifted to Z[zeta_e] by
/// discrete Fourier inversion over the power map. No floating point
/// anywhere.
///
/// Rows are ordered by (dimension ascending, then lexicographic order of
/// the value coefficient sequences along classes); columns follow the
/// conjugacy class order of the group.
class CharacterTable {
 public:
  static CharacterTable compute(GroupPtr group, const Config& cfg = {});
  /// Reassemble a table from trusted parts (cache path); revalidates
  /// dimensions and value shape.
  static CharacterTable from_parts(GroupPtr group,
                                   std::vector<unsigned> dims,
                                   std::vector<Cyclotomic> values);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  unsigned num_irreps() const { return r_; }
  unsigned num_classes() const { return r_; }
  unsigned dim(unsigned irrep) const { return dims_[irrep]; }
  const std::vector<unsigned>& dims() const { return dims_; }
  const Cyclotomic& value(unsigned irrep, unsigned cls) const {
    return values_[static_cast<std::size_t>(irrep) * r_ + cls];
  }
  ClassFunction row(unsigned irrep) const;
  /// Index of the trivial character (all values 1).
  unsigned trivial_irrep() const;

  friend bool operator==(const CharacterTable& a, const CharacterTable& b) {
    return a.dims_ == b.dims_ && a.values_ == b.values_;
  }

 private:
  CharacterTable(GroupPtr group, std::vector<unsigned> dims,
                 std::vector<Cyclotomic> values);

  GroupPtr group_;
  unsigned r_;
  std::vector<unsigned> dims_;
  std::vector<Cyclotomic> values_;  // r x r row-major
};

/// Character of C[X]; its value on a class is the fixed-point count.
ClassFunction permutation_character(const GSet& x);

/// dim Hom_G(pi, C[X]) as an exact nonnegative integer.
Integer multiplicity(const CharacterTable& t, unsigned irrep, const GSet& x);
std::vector<Integer> multiplicities(const CharacterTable& t, const GSet& x);

/// (f * g)(h) = sum_u f(u) g(u^-1 h), assembled from class-algebra
/// structure constants (O(r^3) rather than O(|G|^2)).
ClassFunction convolve(const ClassFunction& f, const ClassFunction& g,
                       const ClassAlgebra& alg);
ClassFunction convolve(const ClassFunction& f, const ClassFunction& g);
/// Literal O(|G|^2) convolution; cross-check for the aggregated route.
ClassFunction convolve_direct(const ClassFunction& f, const ClassFunction& g);

/// (1/|G|) sum_c |c| f(c) conj(g(c)).
Cyclotomic class_inner_product(const ClassFunction& f, const ClassFunction& g);

}  // namespace relfrob
