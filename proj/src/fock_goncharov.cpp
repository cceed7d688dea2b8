#include "relfrob/fock_goncharov.hpp"

#include "relfrob/enumerate.hpp"
#include "relfrob/frobenius.hpp"
#include "relfrob/gelfand.hpp"

namespace relfrob {

Integer framed_count(const CharacterTable& t, const GSet& x, SurfaceType s) {
  // identical to the relative count at g = e with (k, m) = (genus, punctures)
  return relative_count_chars(t, x, 0, s.genus, s.punctures);
}

Integer framed_count_brute(const GSet& x, SurfaceType s, const Config& cfg) {
  const FiniteGroup& G = x.group();
  const auto& fp = x.fixed_counts();
  const unsigned k = s.genus, m = s.punctures;
  check_work(pow_checked(G.order(), 2 * k + m - 1), cfg.work_bound);
  if (2 * k + m - 1 == 0) return fp[0];  // disk: only the trivial map

  auto chunk = [&](Elt lo, Elt hi) -> BigAcc {
    BigAcc total = 0;
    // levels: k commutator pairs, then tau_1..tau_{m-1}; tau_m is the
    // inverse of the accumulated product
    auto rec = [&](auto&& self, unsigned level, Elt prefix,
                   std::uint64_t weight) -> void {
      if (level == k + m - 1) {
        total += static_cast<BigAcc>(weight) * fp[G.inv(prefix)];
        return;
      }
      bool outer = level == 0;
      Elt v_lo = outer ? lo : 0, v_hi = outer ? hi : G.order();
      if (level < k) {
        for (Elt a = v_lo; a < v_hi; ++a)
          for (Elt b = 0; b < G.order(); ++b)
            self(self, level + 1, G.mul(prefix, G.commutator(a, b)), weight);
      } else {
        for (Elt tau = v_lo; tau < v_hi; ++tau) {
          if (fp[tau] == 0) continue;
          self(self, level + 1, G.mul(prefix, tau), weight * fp[tau]);
        }
      }
    };
    rec(rec, 0, 0, 1);
    return total;
  };
  return parallel_sum(G.order(), cfg.threads, chunk);
}

Rational groupoid_volume(const CharacterTable& t, const GSet& x,
                         SurfaceType s) {
  return Rational(framed_count(t, x, s), Integer(t.group().order()));
}

TopologyInvarianceReport topology_invariance_check(const CharacterTable& t,
                                                   const GSet& x, int chi) {
  if (chi > -1)
    throw Error("topology invariance check requires chi <= -1");
  TopologyInvarianceReport rep;
  rep.chi = chi;
  for (unsigned k = 0;; ++k) {
    int m = 2 - 2 * static_cast<int>(k) - chi;
    if (m < 1) break;
    SurfaceType s(k, static_cast<unsigned>(m));
    rep.volumes.emplace_back(s, groupoid_volume(t, x, s));
  }
  rep.all_equal = true;
  for (const auto& [s, v] : rep.volumes)
    if (v != rep.volumes.front().second) rep.all_equal = false;
  rep.multiplicity_free = is_multiplicity_free(t, x);
  rep.consistent = rep.all_equal == rep.multiplicity_free;
  return rep;
}

}  // namespace relfrob
