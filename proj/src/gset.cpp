#include "relfrob/gset.hpp"

#include <algorithm>
#include <random>

namespace relfrob {

GSet::GSet(GroupPtr group, unsigned size, std::vector<Elt> action_row_major,
           std::vector<std::string> point_labels)
    : group_(std::move(group)), size_(size), act_(std::move(action_row_major)) {
  const FiniteGroup& G = *group_;
  if (size_ == 0) throw Error("empty G-set");
  if (act_.size() != static_cast<std::size_t>(G.order()) * size_)
    throw Error("action table has wrong size");
  if (point_labels.empty()) {
    point_labels.resize(size_);
    for (Elt x = 0; x < size_; ++x) point_labels[x] = std::to_string(x);
  }
  if (point_labels.size() != size_) throw Error("point label count mismatch");
  point_labels_ = std::move(point_labels);

  std::vector<bool> seen(size_);
  for (Elt x = 0; x < size_; ++x)
    if (act(0, x) != x) throw Error("identity does not act trivially");
  for (Elt g = 0; g < G.order(); ++g) {
    std::fill(seen.begin(), seen.end(), false);
    for (Elt x = 0; x < size_; ++x) {
      Elt y = act(g, x);
      if (y >= size_ || seen[y]) throw Error("action row is not a permutation");
      seen[y] = true;
    }
  }
  // compatibility a.(b.x) = (ab).x
  std::uint64_t table_cells = static_cast<std::uint64_t>(G.order()) * size_;
  if (table_cells <= 1'000'000) {
    for (Elt a = 0; a < G.order(); ++a)
      for (Elt b = 0; b < G.order(); ++b) {
        Elt ab = G.mul(a, b);
        for (Elt x = 0; x < size_; ++x)
          if (act(a, act(b, x)) != act(ab, x))
            throw Error("action is not compatible with multiplication");
      }
  } else {
    std::mt19937_64 rng(0x9e3779b9ul);
    std::uniform_int_distribution<Elt> pg(0, G.order() - 1);
    std::uniform_int_distribution<Elt> px(0, size_ - 1);
    for (int i = 0; i < 1'000'000; ++i) {
      Elt a = pg(rng), b = pg(rng), x = px(rng);
      if (act(a, act(b, x)) != act(G.mul(a, b), x))
        throw Error("action is not compatible with multiplication");
    }
  }

  fixed_.assign(G.order(), 0);
  for (Elt g = 0; g < G.order(); ++g) {
    std::uint32_t c = 0;
    for (Elt x = 0; x < size_; ++x)
      if (act(g, x) == x) ++c;
    fixed_[g] = c;
  }
}

unsigned GSet::orbit_count() const {
  std::uint64_t total = 0;
  for (std::uint32_t f : fixed_) total += f;
  if (total % group_->order() != 0)
    throw InternalInconsistency("Burnside average is not an integer");
  return static_cast<unsigned>(total / group_->order());
}

std::vector<Elt> GSet::stabilizer(Elt point) const {
  std::vector<Elt> out;
  for (Elt g = 0; g < group_->order(); ++g)
    if (act(g, point) == point) out.push_back(g);
  return out;
}

GSet natural_gset(const PermGroup& pg) {
  unsigned n = pg.group->order();
  std::vector<Elt> table(static_cast<std::size_t>(n) * pg.degree);
  for (Elt g = 0; g < n; ++g)
    for (Elt x = 0; x < pg.degree; ++x)
      table[static_cast<std::size_t>(g) * pg.degree + x] =
          pg.element_perms[g].apply(x);
  std::vector<std::string> labels(pg.degree);
  for (Elt x = 0; x < pg.degree; ++x) labels[x] = std::to_string(x + 1);
  return GSet(pg.group, pg.degree, std::move(table), std::move(labels));
}

GSet regular_gset(const GroupPtr& g) {
  unsigned n = g->order();
  std::vector<Elt> table(static_cast<std::size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt x = 0; x < n; ++x)
      table[static_cast<std::size_t>(a) * n + x] = g->mul(a, x);
  return GSet(g, n, std::move(table), g->labels());
}

GSet one_point_gset(const GroupPtr& g) {
  return GSet(g, 1, std::vector<Elt>(g->order(), 0), {"*"});
}

GSet coset_gset(const GroupPtr& g,
                const std::vector<Elt>& subgroup_generators) {
  const FiniteGroup& G = *g;
  std::vector<Elt> H = G.subgroup_closure(subgroup_generators);
  unsigned n = G.order();
  std::vector<Elt> coset_of(n, n);
  std::vector<Elt> reps;
  for (Elt a = 0; a < n; ++a) {
    if (coset_of[a] != n) continue;
    Elt id = static_cast<Elt>(reps.size());
    reps.push_back(a);  // least member, since a ascends
    for (Elt h : H) coset_of[G.mul(a, h)] = id;
  }
  unsigned m = static_cast<unsigned>(reps.size());
  std::vector<Elt> table(static_cast<std::size_t>(n) * m);
  for (Elt a = 0; a < n; ++a)
    for (Elt x = 0; x < m; ++x)
      table[static_cast<std::size_t>(a) * m + x] = coset_of[G.mul(a, reps[x])];
  std::vector<std::string> labels(m);
  for (Elt x = 0; x < m; ++x) labels[x] = G.label(reps[x]) + "H";
  return GSet(g, m, std::move(table), std::move(labels));
}

std::pair<GroupPtr, GSet> two_sided_gset(const GroupPtr& g,
                                         const Config& cfg) {
  GroupPtr gg = direct_product(g, g, cfg);
  unsigned n = g->order();
  unsigned nn = gg->order();
  std::vector<Elt> table(static_cast<std::size_t>(nn) * n);
  for (Elt h1 = 0; h1 < n; ++h1)
    for (Elt h2 = 0; h2 < n; ++h2) {
      Elt pair = h1 * n + h2;
      for (Elt x = 0; x < n; ++x)
        table[static_cast<std::size_t>(pair) * n + x] =
            g->mul(g->mul(h1, x), g->inv(h2));
    }
  GSet xs(gg, n, std::move(table), g->labels());
  return {gg, std::move(xs)};
}

}  // namespace relfrob
