#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crystalfold/cartan.hpp"
#include "crystalfold/report.hpp"

namespace crystalfold {

// ---------------------------------------------------------------------------
// Reference model of B(infinity): finitely supported sequences over the
// cyclic word iota = (1, 2, ..., n, 1, 2, ...). Slot k (0-based) carries node
// k mod n. The operators use the usual signature rule on
//   sigma_k(a) = a_k + sum_{l > k} <h_{i_k}, alpha_{i_l}> a_l.
// ---------------------------------------------------------------------------

/// Element of B(infinity): trailing zeros trimmed.
struct SeqElement {
  std::vector<long long> a;

  void trim();
  long long height() const;
  bool operator==(const SeqElement& o) const { return a == o.a; }
  bool operator<(const SeqElement& o) const { return a < o.a; }
  /// Canonical id: "slot:value" pairs of the support, comma separated, empty
  /// for the highest element. Slots printed 1-based.
  std::string id() const;
};

int seq_node_at(const CartanDatum& cd, int slot);
long long seq_eps(const CartanDatum& cd, const SeqElement& el, int node);
SeqElement seq_f(const CartanDatum& cd, const SeqElement& el, int node);
std::optional<SeqElement> seq_e(const CartanDatum& cd, const SeqElement& el, int node);
/// wt as a drop vector (the weight is -sum drop_i alpha_i).
Coeffs seq_drop(const CartanDatum& cd, const SeqElement& el);

// ---------------------------------------------------------------------------
// Crystal graphs
// ---------------------------------------------------------------------------

struct CrystalVertex {
  std::string id;
  Weight wt;
  std::vector<long long> eps, phi;
};

struct CrystalEdge {
  int src, node, dst;  // f_node(src) = dst
};

/// Finite labeled crystal graph: the artifact every module exchanges.
struct CrystalGraph {
  CartanDatum cartan;
  std::vector<CrystalVertex> verts;
  std::vector<CrystalEdge> edges;
  int highest = -1;
  std::optional<Weight> lambda;  // set for highest-weight crystals
  bool complete = false;         // true when not clipped by a depth bound

  std::vector<std::vector<int>> fnext, eprev;  // [vertex][node] -> vertex or -1
  std::unordered_map<std::string, int> index;

  int add_vertex(CrystalVertex v);
  void add_edge(int src, int node, int dst);
  int find(const std::string& id) const;
  int f(int v, int node) const { return fnext[v][node]; }
  int e(int v, int node) const { return eprev[v][node]; }
  int size() const { return int(verts.size()); }
  /// Length of the e-string from v to its top along the given node.
  long long e_string_length(int v, int node) const;
  long long f_string_length(int v, int node) const;
};

/// All elements of height <= depth, closed under e, with the f edges.
CrystalGraph generate_binfinity(const CartanDatum& cd, long long depth);

/// B(lambda) by the phi-cutoff inside B(infinity) tensor T_lambda:
/// f_i is applied iff phi_i = eps_i + <h_i, wt + lambda> > 0. Unbounded
/// generation requires finite type; a depth bound permits any datum.
CrystalGraph generate_blambda(const CartanDatum& cd, const Weight& lambda);
CrystalGraph generate_blambda(const CartanDatum& cd, const Weight& lambda,
                              long long depth);

/// Checks every crystal-graph invariant on every element and edge:
/// wt(f b) = wt(b) - alpha, eps/phi steps, phi = eps + <h, wt>, edge
/// reversal, and on complete graphs eps = e-string length.
Report verify_axioms(const CrystalGraph& g);

std::map<Weight, long long> character(const CrystalGraph& g);

/// Unique label/wt/eps/phi-preserving bijection propagated highest-to-highest,
/// or nullopt. Node sets are compared by index, not by name.
std::optional<std::vector<int>> isomorphic(const CrystalGraph& g1,
                                           const CrystalGraph& g2);

// ---------------------------------------------------------------------------
// Elementary crystals B_i and the one-element crystals T_w, with just enough
// tensor-product machinery to check the section 5 identification of B_i with
// the orbit tensor product.
// ---------------------------------------------------------------------------

/// Integer extended by -infinity, the value eps/phi take on elementary and
/// T-crystals.
struct ExtInt {
  bool finite = true;
  long long v = 0;

  static ExtInt minus_inf() { return ExtInt{false, 0}; }
  static ExtInt of(long long x) { return ExtInt{true, x}; }
  bool operator==(const ExtInt& o) const {
    return finite == o.finite && (!finite || v == o.v);
  }
};

/// b_i(n): wt = n alpha_i, phi_i = n, eps_i = -n, all other nodes -infinity.
struct ElementaryElement {
  int node;
  long long level;
};

/// t_w: single element of weight w; all operators vanish.
struct TElement {
  Weight w;
};

/// Pure tensor of elementary elements (right-most factor applied last), with
/// the standard tensor-product crystal structure.
struct ElemTensor {
  std::vector<ElementaryElement> factors;

  Coeffs wt_drop_signed(const CartanDatum& cd) const;  // wt = sum level alpha
  ExtInt eps(const CartanDatum& cd, int node) const;
  ExtInt phi(const CartanDatum& cd, int node) const;
  std::optional<ElemTensor> apply_e(const CartanDatum& cd, int node) const;
  std::optional<ElemTensor> apply_f(const CartanDatum& cd, int node) const;
};

}  // namespace crystalfold
