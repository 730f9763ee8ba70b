#pragma once

#include <string>
#include <vector>

namespace crystalfold {

/// Unordered edge between two vertex indices.
struct Edge {
  int a, b;
};

/// One orientation of an edge: arrow out -> inc.
struct Arrow {
  int out, inc, edge;
};

/// Loop-free multigraph with its double quiver structure: every unoriented
/// edge e gives the two arrows 2e (a->b) and 2e+1 (b->a), bar(h) = h^1, and a
/// chosen orientation Omega containing exactly one arrow per edge.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Edge> edges);

  int vertex_count() const { return int(names_.size()); }
  int edge_count() const { return int(edges_.size()); }
  int arrow_count() const { return 2 * edge_count(); }

  const std::string& vertex_name(int v) const { return names_[v]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  int vertex_index(const std::string& name) const;  // -1 if unknown
  const Edge& edge(int e) const { return edges_[e]; }

  Arrow arrow(int h) const {
    const Edge& e = edges_[h / 2];
    return (h % 2 == 0) ? Arrow{e.a, e.b, h / 2} : Arrow{e.b, e.a, h / 2};
  }
  static int bar(int h) { return h ^ 1; }

  bool in_omega(int h) const { return omega_[h]; }
  int sign(int h) const { return omega_[h] ? +1 : -1; }  // epsilon(h)
  /// Select Omega by listing one arrow per edge; arrows[e] must belong to
  /// edge e.
  void set_omega(const std::vector<int>& arrows);
  /// Default orientation: arrow a->b of each edge {a,b} as given.
  void set_default_omega();

  int edge_multiplicity(int u, int v) const;
  std::vector<int> arrows_into(int v) const;
  std::vector<int> arrows_out_of(int v) const;

  /// True if the underlying graph is a simple path (type A).
  bool is_path() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<char> omega_;  // omega_[h] per arrow
};

/// Graph automorphism: compatible vertex and edge permutations.
struct Automorphism {
  std::vector<int> vertex_map;  // permutation of vertex indices
  std::vector<int> edge_map;    // permutation of edge indices

  /// Derive the edge permutation from a vertex permutation; throws
  /// std::invalid_argument if the vertex map is not a graph automorphism.
  /// Parallel edges are matched in order of appearance.
  static Automorphism from_vertex_map(const Quiver& q, std::vector<int> vmap);

  int apply_vertex(int v) const { return vertex_map[v]; }
  int inverse_vertex(int v) const;
  /// Image of an arrow under the automorphism.
  int apply_arrow(const Quiver& q, int h) const;
  int inverse_arrow(const Quiver& q, int h) const;

  bool is_identity() const;
  /// Order of the permutation (lcm of vertex and edge cycle lengths).
  int order() const;

  /// Vertex orbits, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> vertex_orbits() const;

  /// a(Omega) = Omega, the section 6 compatibility assumption.
  bool preserves_orientation(const Quiver& q) const;
};

/// Simply laced path quiver A_m with vertices "1".."m" and edges oriented
/// toward the middle vertex (compatible with the flip automorphism for odd m).
Quiver path_quiver(int m);

/// D_4 star: center "2" joined to "1", "3", "4"; leaves oriented into the
/// center (compatible with triality).
Quiver d4_quiver();

/// Flip i <-> m+1-i of the path A_m.
Automorphism flip_automorphism(const Quiver& path);

/// The 3-cycle (1 3 4) on the D_4 leaves.
Automorphism triality_automorphism(const Quiver& d4);

Automorphism identity_automorphism(const Quiver& q);

}  // namespace crystalfold
