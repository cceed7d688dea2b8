#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "relfrob/config.hpp"
#include "relfrob/errors.hpp"

namespace relfrob {

using Elt = std::uint32_t;

/// Permutation of {0..degree-1}. Composition applies the right factor
/// first, so products match the left action on points.
class Permutation {
 public:
  explicit Permutation(unsigned degree);
  explicit Permutation(std::vector<Elt> images);

  /// Parses 1-based disjoint-cycle notation, e.g. "(1 2 3)(4 5)" or "e".
  static Permutation from_cycles(unsigned degree, const std::string& text);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  Elt apply(Elt x) const { return img_[x]; }
  const std::vector<Elt>& images() const { return img_; }

  Permutation compose(const Permutation& rhs) const;  // this after rhs
  Permutation inverse() const;
  bool is_identity() const;
  std::string cycle_str() const;  // 1-based; "e" for the identity

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<Elt> img_;
};

struct ConjugacyData {
  unsigned num_classes = 0;
  std::vector<Elt> class_of;              // per element
  std::vector<Elt> representative;        // least member of each class
  std::vector<std::uint32_t> class_size;
  std::vector<std::uint32_t> centralizer_order;
  std::vector<Elt> inverse_class;         // class of the inverses
  std::vector<std::vector<Elt>> members;  // elements per class, ascending
};

/// Finite group given by its full multiplication table. Element 0 is the
/// identity. Construction validates the table (Latin square, two-sided
/// identity, inverses, associativity -- exhaustively up to order 512,
/// otherwise on 10^6 deterministic random triples) and computes the
/// conjugacy data. Immutable afterwards.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> from_table(
      std::vector<Elt> table_row_major, unsigned order,
      std::vector<std::string> labels = {});

  unsigned order() const { return n_; }
  Elt mul(Elt a, Elt b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt commutator(Elt a, Elt b) const {
    return mul(mul(a, b), mul(inv_[a], inv_[b]));
  }
  Elt conjugate(Elt g, Elt x) const { return mul(mul(g, x), inv_[g]); }
  Elt power(Elt g, long e) const;
  unsigned element_order(Elt g) const;
  unsigned exponent() const { return exponent_; }
  const std::string& label(Elt g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const ConjugacyData& conjugacy() const { return conj_; }
  const std::vector<Elt>& table() const { return mul_; }

  bool is_abelian() const;
  std::vector<Elt> subgroup_closure(const std::vector<Elt>& gens) const;
  std::vector<Elt> center() const;

 private:
  FiniteGroup() = default;
  void validate() const;
  void compute_conjugacy();

  unsigned n_ = 0;
  std::vector<Elt> mul_;
  std::vector<Elt> inv_;
  std::vector<std::string> labels_;
  ConjugacyData conj_;
  unsigned exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class GSet;  // gset.hpp

struct PermGroup {
  GroupPtr group;
  std::vector<Permutation> generators;
  std::vector<Permutation> element_perms;  // indexed like group elements
  unsigned degree = 0;
};

/// Closure of permutation generators by breadth-first multiplication.
/// Element 0 is the identity; the rest follow BFS discovery order with
/// generator index as tie-break, so the element indexing is reproducible.
PermGroup perm_group_from_generators(unsigned degree,
                                     const std::vector<Permutation>& gens,
                                     const Config& cfg = {});

/// Direct product with index (a, b) -> a*|B| + b.
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        const Config& cfg = {});
inline Elt product_pair(const FiniteGroup& b_group, Elt a, Elt b) {
  return a * b_group.order() + b;
}

}  // namespace relfrob
