#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystalfold/quiver.hpp"

namespace crystalfold {

using Coeffs = std::vector<long long>;

/// Weight w = sum base_i omega_i - sum drop_i alpha_i with nonnegative
/// coordinate vectors, the shape every weight in this artifact has (a
/// dominant part minus a root-lattice drop).
struct Weight {
  Coeffs base, drop;

  static Weight zero(int rank) { return Weight{Coeffs(rank, 0), Coeffs(rank, 0)}; }
  static Weight fundamental(int rank, int node);
  static Weight minus_alpha(int rank, int node);

  long long height() const;  // total drop
  bool operator==(const Weight& o) const { return base == o.base && drop == o.drop; }
  bool operator<(const Weight& o) const {
    return base != o.base ? base < o.base : drop < o.drop;
  }
};

/// Symmetrizable generalized Cartan matrix C with symmetrizer d, so that
/// M = diag(d) C is symmetric. The symmetric form on the root lattice is
/// (alpha_i, alpha_j) = m_ij.
struct CartanDatum {
  std::vector<std::string> nodes;
  std::vector<Coeffs> a;  // the matrix C
  Coeffs d;               // symmetrizer

  int rank() const { return int(nodes.size()); }
  long long c(int i, int j) const { return a[i][j]; }
  long long m(int i, int j) const { return d[i] * a[i][j]; }

  /// Throws std::invalid_argument if this is not a symmetrizable GCM.
  void validate() const;

  /// <h_i, w> = base_i - sum_j c_ij drop_j.
  long long pairing(int i, const Weight& w) const;
  /// <h_i, beta> for beta in alpha-coordinates.
  long long pairing_root(int i, const Coeffs& beta) const;
  /// (x, y) under the M-form, both in alpha-coordinates.
  long long form(const Coeffs& x, const Coeffs& y) const;

  bool is_dominant(const Weight& w) const;

  /// Finite type <=> the symmetric form M is positive definite.
  bool finite_type() const;

  /// Name of the finite type ("B3", "A2+A1", ...) or nullopt if not finite
  /// or not recognized.
  std::optional<std::string> classify() const;
};

/// Symmetric Cartan datum of a loop-free quiver: a_ii = 2,
/// a_ij = -(edge multiplicity), symmetrizer all one.
CartanDatum cartan_from_quiver(const Quiver& q);

/// Standard finite-type Cartan datum; family in {'A','B','C','D','E','F','G'}.
/// Node order follows the chain; for B_n the last node is short (row entry
/// c_{n,n-1} = -2), matching the fold of A_{2n-1}.
CartanDatum cartan_type(char family, int rank);

/// True if the two data differ only by a simultaneous permutation of nodes.
bool cartan_equivalent(const CartanDatum& x, const CartanDatum& y);

}  // namespace crystalfold
