#include "relfrob/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>

namespace relfrob {

Permutation::Permutation(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation::Permutation(std::vector<Elt> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Elt x : img_) {
    if (x >= img_.size() || seen[x])
      throw Error("permutation images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(unsigned degree,
                                     const std::string& text) {
  std::vector<Elt> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) ||
            text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i >= text.size()) throw ParseError("empty permutation");
  if (text[i] == 'e') {
    ++i;
    skip_ws();
    if (i != text.size()) throw ParseError("unexpected text after 'e'");
    return Permutation(std::move(img));
  }
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<Elt> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle");
      unsigned long v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) +
                         " out of range 1.." + std::to_string(degree));
      cycle.push_back(static_cast<Elt>(v - 1));
    }
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j) {
      for (std::size_t k = j + 1; k < cycle.size(); ++k)
        if (cycle[j] == cycle[k])
          throw ParseError("repeated point in cycle");
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      Elt from = cycle[j];
      Elt to = cycle[(j + 1) % cycle.size()];
      if (img[from] != from) throw ParseError("point repeated across cycles");
      img[from] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw Error("composing permutations of different degrees");
  std::vector<Elt> out(img_.size());
  for (Elt x = 0; x < img_.size(); ++x) out[x] = img_[rhs.img_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Elt> out(img_.size());
  for (Elt x = 0; x < img_.size(); ++x) out[img_[x]] = x;
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (Elt x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::string Permutation::cycle_str() const {
  std::vector<bool> done(img_.size(), false);
  std::string out;
  for (Elt s = 0; s < img_.size(); ++s) {
    if (done[s] || img_[s] == s) continue;
    out += '(';
    Elt x = s;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = img_[x];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_table(
    std::vector<Elt> table_row_major, unsigned order,
    std::vector<std::string> labels) {
  if (order == 0) throw Error("group of order 0");
  if (table_row_major.size() != static_cast<std::size_t>(order) * order)
    throw Error("multiplication table has wrong size");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = order;
  g->mul_ = std::move(table_row_major);
  if (labels.empty()) {
    labels.resize(order);
    for (Elt i = 0; i < order; ++i) labels[i] = "g" + std::to_string(i);
    labels[0] = "e";
  }
  if (labels.size() != order) throw Error("label count mismatch");
  g->labels_ = std::move(labels);
  g->inv_.assign(order, 0);
  for (Elt a = 0; a < order; ++a) {
    bool found = false;
    for (Elt b = 0; b < order; ++b)
      if (g->mul(a, b) == 0) {
        g->inv_[a] = b;
        found = true;
        break;
      }
    if (!found) throw Error("element without inverse");
  }
  g->validate();
  g->compute_conjugacy();
  unsigned e = 1;
  for (unsigned c = 0; c < g->conj_.num_classes; ++c)
    e = std::lcm(e, g->element_order(g->conj_.representative[c]));
  g->exponent_ = e;
  return g;
}

void FiniteGroup::validate() const {
  // identity and Latin square
  std::vector<bool> seen(n_);
  for (Elt a = 0; a < n_; ++a) {
    if (mul(0, a) != a || mul(a, 0) != a)
      throw Error("element 0 is not a two-sided identity");
    std::fill(seen.begin(), seen.end(), false);
    for (Elt b = 0; b < n_; ++b) {
      Elt p = mul(a, b);
      if (p >= n_ || seen[p]) throw Error("multiplication row is not a permutation");
      seen[p] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    for (Elt b = 0; b < n_; ++b) {
      Elt p = mul(b, a);
      if (seen[p]) throw Error("multiplication column is not a permutation");
      seen[p] = true;
    }
    if (mul(a, inv_[a]) != 0 || mul(inv_[a], a) != 0)
      throw Error("inverse table inconsistent");
  }
  // associativity
  if (n_ <= 512) {
    for (Elt a = 0; a < n_; ++a)
      for (Elt b = 0; b < n_; ++b)
        for (Elt c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("multiplication table is not associative");
  } else {
    std::mt19937_64 rng(0x5e1fc0de);
    std::uniform_int_distribution<Elt> pick(0, n_ - 1);
    for (int i = 0; i < 1'000'000; ++i) {
      Elt a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw Error("multiplication table is not associative");
    }
  }
}

void FiniteGroup::compute_conjugacy() {
  std::vector<Elt> cls(n_, n_);
  std::vector<std::vector<Elt>> members;
  for (Elt x = 0; x < n_; ++x) {
    if (cls[x] != n_) continue;
    Elt id = static_cast<Elt>(members.size());
    std::vector<Elt> orbit;
    for (Elt g = 0; g < n_; ++g) {
      Elt y = conjugate(g, x);
      if (cls[y] == n_) {
        cls[y] = id;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    members.push_back(std::move(orbit));
  }
  // order classes by (size ascending, least member ascending)
  std::vector<Elt> perm(members.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](Elt a, Elt b) {
    if (members[a].size() != members[b].size())
      return members[a].size() < members[b].size();
    return members[a][0] < members[b][0];
  });
  conj_.num_classes = static_cast<unsigned>(members.size());
  conj_.members.resize(members.size());
  conj_.representative.resize(members.size());
  conj_.class_size.resize(members.size());
  conj_.centralizer_order.resize(members.size());
  conj_.class_of.assign(n_, 0);
  for (unsigned newid = 0; newid < perm.size(); ++newid) {
    auto& m = members[perm[newid]];
    conj_.representative[newid] = m[0];
    conj_.class_size[newid] = static_cast<std::uint32_t>(m.size());
    conj_.centralizer_order[newid] =
        static_cast<std::uint32_t>(n_ / m.size());
    for (Elt x : m) conj_.class_of[x] = newid;
    conj_.members[newid] = std::move(m);
  }
  conj_.inverse_class.resize(conj_.num_classes);
  for (unsigned c = 0; c < conj_.num_classes; ++c)
    conj_.inverse_class[c] = conj_.class_of[inv_[conj_.representative[c]]];
  if (conj_.class_of[0] != 0 || conj_.class_size[0] != 1)
    throw InternalInconsistency("identity class is not class 0");
}

Elt FiniteGroup::power(Elt g, long e) const {
  unsigned o = element_order(g);
  long r = e % static_cast<long>(o);
  if (r < 0) r += o;
  Elt acc = 0;
  for (long i = 0; i < r; ++i) acc = mul(acc, g);
  return acc;
}

unsigned FiniteGroup::element_order(Elt g) const {
  unsigned o = 1;
  Elt x = g;
  while (x != 0) {
    x = mul(x, g);
    ++o;
  }
  return o;
}

bool FiniteGroup::is_abelian() const {
  return conj_.num_classes == n_;
}

std::vector<Elt> FiniteGroup::subgroup_closure(
    const std::vector<Elt>& gens) const {
  for (Elt g : gens)
    if (g >= n_) throw Error("subgroup generator out of range");
  std::vector<bool> in(n_, false);
  std::vector<Elt> queue{0};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Elt w = queue[head];
    for (Elt g : gens) {
      Elt x = mul(w, g);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  }
  std::vector<Elt> out;
  for (Elt x = 0; x < n_; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<Elt> FiniteGroup::center() const {
  std::vector<Elt> out;
  for (Elt x = 0; x < n_; ++x) {
    bool central = true;
    for (Elt g = 0; g < n_ && central; ++g)
      central = mul(x, g) == mul(g, x);
    if (central) out.push_back(x);
  }
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elt>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Elt x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

PermGroup perm_group_from_generators(unsigned degree,
                                     const std::vector<Permutation>& gens,
                                     const Config& cfg) {
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw Error("generator degree mismatch");
  std::vector<Permutation> elems;
  std::unordered_map<std::vector<Elt>, Elt, VecHash> index;
  elems.emplace_back(degree);
  index.emplace(elems[0].images(), 0u);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = elems[head].compose(g);
      if (index.emplace(next.images(), static_cast<Elt>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cfg.group_size_cap)
          throw TooLarge("permutation closure exceeds cap of " +
                         std::to_string(cfg.group_size_cap));
      }
    }
  }
  unsigned n = static_cast<unsigned>(elems.size());
  std::vector<Elt> table(static_cast<std::size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] =
          index.at(elems[a].compose(elems[b]).images());
  std::vector<std::string> labels(n);
  for (Elt i = 0; i < n; ++i) labels[i] = elems[i].cycle_str();
  PermGroup out;
  out.group = FiniteGroup::from_table(std::move(table), n, std::move(labels));
  out.generators = gens;
  out.element_perms = std::move(elems);
  out.degree = degree;
  return out;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                        const Config& cfg) {
  std::uint64_t n64 = static_cast<std::uint64_t>(a->order()) * b->order();
  if (n64 > cfg.group_size_cap)
    throw TooLarge("direct product exceeds cap");
  unsigned na = a->order(), nb = b->order();
  unsigned n = static_cast<unsigned>(n64);
  std::vector<Elt> table(static_cast<std::size_t>(n) * n);
  for (Elt xa = 0; xa < na; ++xa)
    for (Elt xb = 0; xb < nb; ++xb) {
      Elt x = xa * nb + xb;
      for (Elt ya = 0; ya < na; ++ya)
        for (Elt yb = 0; yb < nb; ++yb) {
          Elt y = ya * nb + yb;
          table[static_cast<std::size_t>(x) * n + y] =
              a->mul(xa, ya) * nb + b->mul(xb, yb);
        }
    }
  std::vector<std::string> labels(n);
  for (Elt xa = 0; xa < na; ++xa)
    for (Elt xb = 0; xb < nb; ++xb)
      labels[xa * nb + xb] = "(" + a->label(xa) + "," + b->label(xb) + ")";
  return FiniteGroup::from_table(std::move(table), n, std::move(labels));
}

}  // namespace relfrob
