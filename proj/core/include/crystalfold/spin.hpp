#pragma once

#include <optional>

#include "crystalfold/crystal.hpp"
#include "crystalfold/matrix.hpp"
#include "crystalfold/quiverrep.hpp"

namespace crystalfold {

/// Young diagram inside an n x n box; parts weakly decreasing, trailing zeros
/// kept so parts.size() == n.
struct YoungDiagram {
  int n = 0;
  std::vector<int> parts;

  static YoungDiagram empty(int n) { return YoungDiagram{n, std::vector<int>(n, 0)}; }
  static YoungDiagram from_parts(int n, std::vector<int> parts);

  bool operator==(const YoungDiagram& o) const { return n == o.n && parts == o.parts; }
  bool operator<(const YoungDiagram& o) const { return parts < o.parts; }
  bool contains(int row, int col) const;  // 1-based
  int box_count() const;
  /// "2,1" notation; empty diagram prints as "".
  std::string str() const;
};

/// Degree of box (row, col): the Dynkin vertex n + col - row of A_{2n-1}
/// sitting above the box.
int degree(int n, int row, int col);

/// The unique addable/removable box of the given degree, or absent (the
/// ghost partition).
std::optional<YoungDiagram> add_box(const YoungDiagram& y, int deg);
std::optional<YoungDiagram> remove_box(const YoungDiagram& y, int deg);

YoungDiagram conjugate(const YoungDiagram& y);
bool self_conjugate(const YoungDiagram& y);

/// All diagrams in the n x n box, lexicographically by parts.
std::vector<YoungDiagram> all_diagrams(int n);
std::vector<YoungDiagram> self_conjugate_set(int n);

/// Spin crystal operators on self-conjugate diagrams: for k < n a double
/// add/remove at degrees k and 2n-k (atomic), at k = n a single box.
/// k is 1-based. Rejects non-self-conjugate input.
std::optional<YoungDiagram> spin_f(const YoungDiagram& y, int k);
std::optional<YoungDiagram> spin_e(const YoungDiagram& y, int k);

/// omega_n minus the degree-counted drop, in B_n coordinates (node k of B_n
/// is the orbit {k, 2n-k}).
Weight spin_wt(const YoungDiagram& y);

/// The crystal on self_conjugate_set(n) over the standard B_n datum.
CrystalGraph build_spin_crystal(int n);

/// Chevalley generators acting on the span of the self-conjugate diagrams,
/// indexed in the order of self_conjugate_set(n).
struct SpinMatrices {
  int n = 0;
  std::vector<IMat> E, F, H;  // one triple per k = 1..n
};

SpinMatrices chevalley_matrices(int n);

/// Exact matrix identities: [H,H] = 0, [E_k,F_l] = delta H_k,
/// [H_k, E_l] = c_kl E_l, [H_k, F_l] = -c_kl F_l, and both Serre relations.
Report verify_relations(const SpinMatrices& sm, const CartanDatum& bn);

/// Canonical representative of the component X_Y in Lambda(v; e^n) for the
/// A_{2n-1} quiver: basis vectors are boxes, x acts by unit "left" maps and
/// sign-carrying "up" maps, t reads the coefficient of box (1,1).
NakajimaPoint rep_from_young(const YoungDiagram& y);

/// Iterated single-box string lengths in B_Q(e^n) (combinatorial epsilon/phi
/// of the unfolded crystal).
int young_eps(const YoungDiagram& y, int deg);
int young_phi(const YoungDiagram& y, int deg);

}  // namespace crystalfold
