#pragma once

#include "relfrob/chartable.hpp"

namespace relfrob {

/// Surface of finite type: genus k with m >= 1 punctures,
/// chi = 2 - 2k - m.
struct SurfaceType {
  SurfaceType(unsigned genus_, unsigned punctures_)
      : genus(genus_), punctures(punctures_) {
    if (punctures < 1) throw Error("surface of finite type needs m >= 1");
  }
  unsigned genus;
  unsigned punctures;
  int euler_char() const {
    return 2 - 2 * static_cast<int>(genus) - static_cast<int>(punctures);
  }
};

/// Number of X-framed representations of the surface group:
/// |G|^(1-chi) sum_pi mult(pi,X)^m / dim^(-chi).
Integer framed_count(const CharacterTable& t, const GSet& x, SurfaceType s);

/// The same count by enumerating homomorphisms: the images of
/// a_1,b_1,..,a_k,b_k,tau_1..tau_{m-1} are free, tau_m is forced by the
/// surface relation, and each homomorphism is weighted by
/// prod_j #X^{rho(tau_j)}.
Integer framed_count_brute(const GSet& x, SurfaceType s,
                           const Config& cfg = {});

/// Groupoid volume of the quotient: framed_count / |G|.
Rational groupoid_volume(const CharacterTable& t, const GSet& x,
                         SurfaceType s);

/// Volumes across all (k, m) realizing a fixed chi <= -1; they agree for
/// every realization exactly when X is multiplicity free.
struct TopologyInvarianceReport {
  int chi = 0;
  std::vector<std::pair<SurfaceType, Rational>> volumes;
  bool all_equal = false;
  bool multiplicity_free = false;
  bool consistent = false;  // all_equal == multiplicity_free
};
TopologyInvarianceReport topology_invariance_check(const CharacterTable& t,
                                                   const GSet& x, int chi);

}  // namespace relfrob
