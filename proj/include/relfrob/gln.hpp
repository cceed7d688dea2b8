#pragma once

#include "relfrob/chartable.hpp"
#include "relfrob/fock_goncharov.hpp"
#include "relfrob/laurent.hpp"

namespace relfrob {

struct Partition {
  std::vector<unsigned> parts;  // weakly decreasing, positive
  unsigned n() const;
  std::string str() const;  // "(2,1)"
};

/// All partitions of n in reverse-lexicographic order: (n) first,
/// (1,..,1) last.
std::vector<Partition> partitions(unsigned n);

Partition conjugate_partition(const Partition& p);

/// Hook lengths h(i,j) = lambda_i - j + lambda*_j - i + 1, one per box in
/// row-major order.
std::vector<unsigned> hook_lengths(const Partition& p);

/// n(lambda) = sum_k (k-1) lambda_k.
unsigned partition_weight_stat(const Partition& p);

/// Dimension of the Specht module: n! / prod of hooks (exact).
Integer specht_dim(const Partition& p);

/// Reading of the q-analog dimension formula. `corrected` uses the group
/// order factor prod_{c=1..n}(q^c - 1); `paper_literal` multiplies by the
/// extra q^(n(n-1)/2) that comes from reading the factor as the full
/// #GL_n(F_q). Only `corrected` matches the actual finite groups.
enum class Convention { paper_literal, corrected };

/// Unipotent dimension polynomial
///   q^n(lambda) * prod_{c=1..n}(q^c - 1) / prod_boxes (q^h - 1)
/// (times q^(n(n-1)/2) under paper_literal). Division must be exact.
LaurentPoly unipotent_dim(const Partition& p, Convention conv);

/// #GL_n(F_q) as a polynomial: prod_{c=0..n-1} (q^n - q^c).
LaurentPoly gl_order_poly(unsigned n, std::string var = "q");

/// GL_n(F_q) together with its action on complete flags. The group
/// carries every invertible matrix (the flag action is not faithful when
/// scalars exist); flags are ordered lexicographically by their reduced
/// row-echelon representatives.
struct GLFlag {
  GroupPtr group;
  GSet flags;
  unsigned n = 0;
  unsigned q = 0;
  std::vector<Elt> upper_triangular;  // the standard Borel subgroup
  Elt standard_flag = 0;              // index of the e_1 < e_1,e_2 < .. flag
};
GLFlag build_gl_flag(unsigned n, unsigned q, const Config& cfg = {});

/// Closed-form groupoid volume of the flag moduli space as a Laurent
/// polynomial in q; requires chi(S) <= 0 (NonPolynomial otherwise).
LaurentPoly fg_vol_closed_poly(unsigned n, SurfaceType s, Convention conv);

/// Closed-form volume evaluated at a rational q (any chi; ZeroBase at 0).
Rational fg_vol_closed_at(unsigned n, SurfaceType s, Convention conv,
                          const Rational& q);

/// E-polynomial of the framed space in t = xy: #GL_n(t) times the volume
/// sum; requires chi(S) <= 0.
LaurentPoly fg_epoly(unsigned n, SurfaceType s, Convention conv);

/// Decomposition check of C[Fl] against the closed formulas: for each
/// partition, the predicted constituent (unipotent_dim at q, specht_dim)
/// must match the multiplicities computed from the actual character
/// table, and the dimensions must add up to the flag count.
struct UnipotentCheckRow {
  Partition partition;
  Integer predicted_dim;        // unipotent_dim(corrected) at q
  Integer predicted_mult;       // specht_dim
};
struct UnipotentCheckReport {
  unsigned n = 0, q = 0;
  std::vector<UnipotentCheckRow> rows;
  std::vector<std::pair<Integer, Integer>> actual;  // (dim, mult), mult > 0
  Integer flag_count;
  bool decomposition_matches = false;
  bool dimension_sum_matches = false;
  bool ok = false;
};
UnipotentCheckReport unipotent_multiplicity_check(unsigned n, unsigned q,
                                                  const Config& cfg = {});

}  // namespace relfrob
