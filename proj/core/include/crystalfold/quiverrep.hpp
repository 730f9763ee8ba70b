#pragma once

#include "crystalfold/matrix.hpp"
#include "crystalfold/quiver.hpp"
#include "crystalfold/report.hpp"

namespace crystalfold {

/// Point of E(v): I-graded spaces with a rational matrix per arrow of the
/// double quiver. x[h] maps V_{out(h)} -> V_{inc(h)}.
struct QuiverRep {
  Quiver quiver;
  std::vector<int> dims;
  std::vector<QMat> x;  // indexed by arrow

  static QuiverRep zero(const Quiver& q, std::vector<int> dims);
  void validate() const;  // shape check
};

/// Point of Lambda(v; w): a representation plus t_i : V_i -> W_i.
struct NakajimaPoint {
  QuiverRep rep;
  std::vector<int> wdims;
  std::vector<QMat> t;  // per vertex

  void validate() const;
};

/// psi_i(x) = sum_{inc(h)=i} eps(h) x_h x_hbar == 0, per vertex.
std::vector<bool> moment_check(const QuiverRep& r);
bool moment_check_all(const QuiverRep& r);

/// True iff every composition of N = sum dims + 1 arrows vanishes
/// (depth-first with zero-product pruning).
bool nilpotency_check(const QuiverRep& r);

/// dim coker of the stacked arrows into vertex i; t plays no role.
int epsilon_geom(const QuiverRep& r, int vertex);
int epsilon_geom(const NakajimaPoint& p, int vertex);

/// Largest x-stable graded subspace of ker t is zero. Computed as a
/// decreasing fixpoint S^0 = ker t, S^{m+1} = {v in S^m : x v in S^m}.
bool stability_check(const NakajimaPoint& p);

/// The functor F(a): (aV)_i = V_{a^{-1}(i)}, (ax)_h = x_{a^{-1}(h)},
/// (at)_i = t_{a^{-1}(i)}.
QuiverRep apply_Fa(const QuiverRep& r, const Automorphism& a);
NakajimaPoint apply_Fa(const NakajimaPoint& p, const Automorphism& a);

/// Complete isomorphism test for nilpotent representations of a type A
/// quiver: graded dimensions plus the rank of the composition along every
/// arrow path (pruned at the nilpotency bound). Throws std::invalid_argument
/// off type A.
bool reps_isomorphic(const QuiverRep& r1, const QuiverRep& r2);

}  // namespace crystalfold
