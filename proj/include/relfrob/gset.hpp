#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relfrob/group.hpp"

namespace relfrob {

/// Finite G-set given by its full action table. Rows are validated to be
/// permutations, the identity row to be trivial, and compatibility
/// a.(b.x) = (ab).x exhaustively when |G|*|X| <= 10^6 (deterministically
/// sampled above that). Fixed-point counts are precomputed per element.
class GSet {
 public:
  GSet(GroupPtr group, unsigned size, std::vector<Elt> action_row_major,
       std::vector<std::string> point_labels = {});

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  unsigned size() const { return size_; }
  Elt act(Elt g, Elt x) const {
    return act_[static_cast<std::size_t>(g) * size_ + x];
  }
  const std::string& point_label(Elt x) const { return point_labels_[x]; }

  unsigned fixed_points(Elt g) const { return fixed_[g]; }
  const std::vector<std::uint32_t>& fixed_counts() const { return fixed_; }

  /// Number of orbits, via the Burnside average (exactness asserted).
  unsigned orbit_count() const;

  std::vector<Elt> stabilizer(Elt point) const;

 private:
  GroupPtr group_;
  unsigned size_ = 0;
  std::vector<Elt> act_;
  std::vector<std::string> point_labels_;
  std::vector<std::uint32_t> fixed_;
};

/// The natural G-set of a permutation group on {0..degree-1}.
GSet natural_gset(const PermGroup& pg);

/// G acting on itself by left multiplication.
GSet regular_gset(const GroupPtr& g);

/// The one-point G-set.
GSet one_point_gset(const GroupPtr& g);

/// Left cosets gH of the subgroup generated by `subgroup_generators`,
/// with the coset of the identity as point 0 and the remaining cosets
/// ordered by least member.
GSet coset_gset(const GroupPtr& g, const std::vector<Elt>& subgroup_generators);

/// G x G acting on G by (h1,h2).x = h1 x h2^-1. Returns the product group
/// together with the action; points are indexed like elements of G.
std::pair<GroupPtr, GSet> two_sided_gset(const GroupPtr& g,
                                         const Config& cfg = {});

}  // namespace relfrob
