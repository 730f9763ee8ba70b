#pragma once

#include "crystalfold/cartan.hpp"
#include "crystalfold/quiver.hpp"
#include "crystalfold/report.hpp"

namespace crystalfold {

/// Result of check_admissible: offending edges join two vertices of one orbit.
struct AdmissibilityReport {
  bool admissible = true;
  std::vector<int> offending_edges;
  Report report;
};

/// An admissible pair (Q, a) folded to the orbit-indexed symmetrizable datum:
/// orbits I, symmetric M with m_ii = 2|orbit|, m_ij = -(edges between
/// orbits), D = diag(|orbit|) and C = D^{-1} M.
struct FoldedDatum {
  Quiver source;
  Automorphism autom;
  CartanDatum source_cartan;              // symmetric datum of the quiver
  std::vector<std::vector<int>> orbits;   // sorted by smallest member
  std::vector<int> orbit_of;              // source vertex -> orbit index
  CartanDatum cartan;                     // folded datum over the orbits

  int orbit_count() const { return int(orbits.size()); }

  /// f: constant-on-orbit source vectors -> orbit vectors.
  Coeffs fold_vector(const Coeffs& x) const;
  /// f^{-1}: orbit vectors -> constant-on-orbit source vectors.
  Coeffs unfold_vector(const Coeffs& y) const;
  Weight fold_weight(const Weight& w) const;
  Weight unfold_weight(const Weight& w) const;

  bool invariant_vector(const Coeffs& x) const;
  bool invariant_weight(const Weight& w) const;

  /// <h_orbit, w> by the lift-and-average definition
  /// h_i = (1/d_i) sum over the orbit of source coroots. This is the ground
  /// truth for the folded pairing; agreement with the Cartan-entry formula is
  /// a checked identity, not an assumption.
  long long pairing(int orbit, const Weight& folded_wt) const;
};

AdmissibilityReport check_admissible(const Quiver& q, const Automorphism& a);

/// Throws std::invalid_argument if (q, a) is not admissible.
FoldedDatum fold(const Quiver& q, const Automorphism& a);

}  // namespace crystalfold
