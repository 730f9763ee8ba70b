#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystalfold/folding.hpp"
#include "crystalfold/roots.hpp"

using namespace crystalfold;

namespace {

struct A3Setup {
  Quiver q = path_quiver(3);
  Automorphism a = flip_automorphism(q);
  FoldedDatum fd = fold(q, a);
  CartanDatum cd = cartan_from_quiver(q);
  CrystalGraph bw2 = generate_blambda(cd, Weight::fundamental(3, 1));
};

}  // namespace

TEST_CASE("orbit operators") {
  A3Setup s;
  REQUIRE(s.bw2.size() == 6);
  const std::vector<int>& orbit13 = s.fd.orbits[0];
  REQUIRE(orbit13 == std::vector<int>{0, 2});

  // On f_2(top) both f_1 and f_3 apply; the composite drops alpha_1 + alpha_3.
  int b = s.bw2.f(s.bw2.highest, 1);
  REQUIRE(b != -1);
  int c = orbit_f(s.bw2, b, orbit13);
  REQUIRE(c != -1);
  Coeffs expect = s.bw2.verts[b].wt.drop;
  expect[0] += 1;
  expect[2] += 1;
  CHECK(s.bw2.verts[c].wt.drop == expect);
  CHECK(orbit_e(s.bw2, c, orbit13) == b);

  // At the highest element every raising operator is absent.
  CHECK(orbit_e(s.bw2, s.bw2.highest, orbit13) == -1);
  CHECK(orbit_e(s.bw2, s.bw2.highest, {1}) == -1);

  // A singleton orbit is the plain operator.
  CHECK(orbit_f(s.bw2, s.bw2.highest, {1}) == s.bw2.f(s.bw2.highest, 1));
}

TEST_CASE("order dependence inside an orbit is fatal") {
  // Hand-built graph where f_1 f_3 != f_3 f_1: top -1-> p -3-> x,
  // top -3-> q -1-> y with x != y.
  CrystalGraph g;
  g.cartan = cartan_type('A', 3);
  auto mk = [&](const std::string& id, Coeffs drop) {
    CrystalVertex v;
    v.id = id;
    v.wt = Weight{Coeffs{0, 0, 0}, std::move(drop)};
    v.eps = {0, 0, 0};
    v.phi = {0, 0, 0};
    return g.add_vertex(v);
  };
  int top = mk("top", {0, 0, 0});
  g.highest = top;
  int p = mk("p", {1, 0, 0});
  int q = mk("q", {0, 0, 1});
  int x = mk("x", {1, 0, 1});
  int y = mk("y!", {1, 0, 1});
  g.add_edge(top, 0, p);
  g.add_edge(p, 2, x);
  g.add_edge(top, 2, q);
  g.add_edge(q, 0, y);
  CHECK_THROWS_AS(orbit_f(g, top, std::vector<int>{0, 2}), std::logic_error);
}

TEST_CASE("induced automorphism on B(omega_2) of A3") {
  A3Setup s;
  InducedAutomorphism ia = induced_automorphism(s.bw2, s.q, s.a);
  CHECK(ia.fixed_vertices().size() == 4);

  // sigma is a relabeled graph automorphism edge by edge.
  for (const CrystalEdge& e : s.bw2.edges) {
    int img = s.bw2.f(ia.sigma[e.src], s.a.vertex_map[e.node]);
    CHECK(img == ia.sigma[e.dst]);
  }
  // On fixed elements eps agrees across each orbit.
  for (int v : ia.fixed_vertices())
    for (const auto& orbit : s.fd.orbits)
      for (int i : orbit)
        CHECK(s.bw2.verts[v].eps[i] == s.bw2.verts[v].eps[orbit[0]]);

  InducedAutomorphism id_ia = induced_automorphism(s.bw2, s.q, identity_automorphism(s.q));
  for (int v = 0; v < s.bw2.size(); ++v) CHECK(id_ia.sigma[v] == v);
}

TEST_CASE("induced automorphism works for non-admissible automorphisms") {
  Quiver a2 = path_quiver(2);
  CrystalGraph g = generate_binfinity(cartan_from_quiver(a2), 2);
  InducedAutomorphism ia = induced_automorphism(g, a2, flip_automorphism(a2));
  int f1 = g.f(g.highest, 0), f2 = g.f(g.highest, 1);
  CHECK(ia.sigma[f1] == f2);
  CHECK(ia.sigma[f2] == f1);
}

TEST_CASE("induced automorphism rejects non-invariant highest weight") {
  Quiver a3 = path_quiver(3);
  CrystalGraph g = generate_blambda(cartan_from_quiver(a3), Weight::fundamental(3, 0));
  CHECK_THROWS_AS(induced_automorphism(g, a3, flip_automorphism(a3)),
                  std::invalid_argument);
}

TEST_CASE("folded crystal of (A3, omega_2) is the B2 spin crystal") {
  A3Setup s;
  FoldedCrystal fc = folded_crystal(s.bw2, s.fd, FoldMode::highest_weight);
  REQUIRE(fc.graph.size() == 4);
  std::vector<int> labels;
  for (const CrystalEdge& e : fc.graph.edges) labels.push_back(e.node);
  CHECK(labels == std::vector<int>{1, 0, 1});
  CHECK(verify_axioms(fc.graph).ok());

  Weight lam{s.fd.fold_vector(Weight::fundamental(3, 1).base), {0, 0}};
  CHECK(verify_folded_is_target(fc, s.fd, FoldMode::highest_weight, &lam).ok());

  // Weight drop of an orbit edge is the lifted alpha.
  for (const CrystalEdge& e : fc.graph.edges) {
    Coeffs lift = s.fd.unfold_vector(fc.graph.verts[e.dst].wt.drop);
    Coeffs prev = s.fd.unfold_vector(fc.graph.verts[e.src].wt.drop);
    for (int v = 0; v < 3; ++v)
      CHECK(lift[v] - prev[v] ==
            (s.fd.orbit_of[v] == e.node ? 1 : 0));
  }
}

TEST_CASE("identity fold returns the source crystal") {
  Quiver a3 = path_quiver(3);
  FoldedDatum fd = fold(a3, identity_automorphism(a3));
  CrystalGraph src = generate_blambda(cartan_from_quiver(a3), Weight::fundamental(3, 1));
  FoldedCrystal fc = folded_crystal(src, fd, FoldMode::highest_weight);
  CHECK(fc.graph.size() == src.size());
  CHECK(isomorphic(fc.graph, src).has_value());
}

TEST_CASE("folded crystal rejects non-admissible automorphisms") {
  Quiver a2 = path_quiver(2);
  CrystalGraph g = generate_binfinity(cartan_from_quiver(a2), 2);
  CHECK_THROWS_AS(fold(a2, flip_automorphism(a2)), std::invalid_argument);
}

TEST_CASE("D4 adjoint folds to the 7-dimensional G2 crystal") {
  Quiver d4 = d4_quiver();
  Automorphism tri = triality_automorphism(d4);
  FoldedDatum fd = fold(d4, tri);
  CrystalGraph adj = generate_blambda(cartan_from_quiver(d4), Weight::fundamental(4, 1));
  REQUIRE(adj.size() == 28);
  FoldedCrystal fc = folded_crystal(adj, fd, FoldMode::highest_weight);
  CHECK(fc.graph.size() == 7);
  Weight lam{fd.fold_vector(Weight::fundamental(4, 1).base), {0, 0}};
  CHECK(verify_folded_is_target(fc, fd, FoldMode::highest_weight, &lam).ok());
  CHECK(weyl_dim(fd.cartan, lam) == 7);

  InducedAutomorphism ia = induced_automorphism(adj, d4, tri);
  CHECK(check_fixed_equals_generated(adj, ia, fc, FoldMode::highest_weight).ok());
  CHECK(ia.fixed_vertices().size() == 7);
}

TEST_CASE("fixed equals generated") {
  A3Setup s;
  InducedAutomorphism ia = induced_automorphism(s.bw2, s.q, s.a);
  FoldedCrystal fc = folded_crystal(s.bw2, s.fd, FoldMode::highest_weight);
  CHECK(check_fixed_equals_generated(s.bw2, ia, fc, FoldMode::highest_weight).ok());

  // A5, omega_3: the 20-element crystal has 8 = 2^3 fixed elements.
  Quiver a5 = path_quiver(5);
  Automorphism flip = flip_automorphism(a5);
  FoldedDatum fd5 = fold(a5, flip);
  CrystalGraph src = generate_blambda(cartan_from_quiver(a5), Weight::fundamental(5, 2));
  REQUIRE(src.size() == 20);
  InducedAutomorphism ia5 = induced_automorphism(src, a5, flip);
  FoldedCrystal fc5 = folded_crystal(src, fd5, FoldMode::highest_weight);
  CHECK(ia5.fixed_vertices().size() == 8);
  CHECK(fc5.graph.size() == 8);
  CHECK(check_fixed_equals_generated(src, ia5, fc5, FoldMode::highest_weight).ok());
}

TEST_CASE("infinity mode folding against the Kostant oracle") {
  // A3 -> B2 at source height 6, generated to 6 + max d = 8.
  A3Setup s;
  CrystalGraph src = generate_binfinity(s.cd, 8);
  InducedAutomorphism ia = induced_automorphism(src, s.q, s.a);
  FoldedCrystal fc = folded_crystal(src, s.fd, FoldMode::infinity);
  CHECK(check_fixed_equals_generated(src, ia, fc, FoldMode::infinity, 6).ok());
  CHECK(verify_folded_is_target(fc, s.fd, FoldMode::infinity, nullptr, 8).ok());

  // D4 -> G2 at depth 5 (+3).
  Quiver d4 = d4_quiver();
  Automorphism tri = triality_automorphism(d4);
  FoldedDatum fd = fold(d4, tri);
  CrystalGraph src4 = generate_binfinity(cartan_from_quiver(d4), 8);
  InducedAutomorphism ia4 = induced_automorphism(src4, d4, tri);
  FoldedCrystal fc4 = folded_crystal(src4, fd, FoldMode::infinity);
  CHECK(check_fixed_equals_generated(src4, ia4, fc4, FoldMode::infinity, 5).ok());
  CHECK(verify_folded_is_target(fc4, fd, FoldMode::infinity, nullptr, 8).ok());
}

TEST_CASE("eps mismatch detection is wired to the theorems, not assumed") {
  // Folding the B(omega_1) of A3 (whose top weight is not flip-invariant)
  // must be rejected before any eps comparison happens.
  A3Setup s;
  CrystalGraph w1 = generate_blambda(s.cd, Weight::fundamental(3, 0));
  CHECK_THROWS(folded_crystal(w1, s.fd, FoldMode::highest_weight));
}
