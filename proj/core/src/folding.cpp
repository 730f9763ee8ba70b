#include "crystalfold/folding.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "crystalfold/roots.hpp"

namespace crystalfold {

namespace {

int apply_chain(const CrystalGraph& g, int v, const std::vector<int>& nodes, bool down) {
  for (int i : nodes) {
    v = down ? g.f(v, i) : g.e(v, i);
    if (v == -1) return -1;
  }
  return v;
}

void assert_order_free(const CrystalGraph& g, int v, const std::vector<int>& orbit,
                       bool down) {
  // Pairwise commutation implies independence of the exhaustion order.
  for (size_t x = 0; x < orbit.size(); ++x)
    for (size_t y = x + 1; y < orbit.size(); ++y) {
      int r1 = apply_chain(g, v, {orbit[x], orbit[y]}, down);
      int r2 = apply_chain(g, v, {orbit[y], orbit[x]}, down);
      if (r1 != r2)
        throw std::logic_error(
            std::string("orbit operators do not commute at ") + g.verts[v].id +
            " (nodes " + g.cartan.nodes[orbit[x]] + "," + g.cartan.nodes[orbit[y]] +
            (down ? ", f)" : ", e)"));
    }
}

}  // namespace

int orbit_f(const CrystalGraph& g, int v, const std::vector<int>& orbit) {
  assert_order_free(g, v, orbit, true);
  return apply_chain(g, v, orbit, true);
}

int orbit_e(const CrystalGraph& g, int v, const std::vector<int>& orbit) {
  assert_order_free(g, v, orbit, false);
  return apply_chain(g, v, orbit, false);
}

InducedAutomorphism induced_automorphism(const CrystalGraph& g, const Quiver& q,
                                         const Automorphism& a) {
  if (g.cartan.rank() != q.vertex_count())
    throw std::invalid_argument("induced_automorphism: graph is not over the quiver");
  if (g.lambda) {
    // B(w) needs an a-invariant highest weight.
    const Weight& w = *g.lambda;
    for (int v = 0; v < q.vertex_count(); ++v)
      if (w.base[v] != w.base[a.vertex_map[v]])
        throw std::invalid_argument("induced_automorphism: w is not a-invariant");
  }

  InducedAutomorphism ia;
  ia.sigma.assign(g.size(), -1);
  ia.sigma[g.highest] = g.highest;
  std::deque<int> queue{g.highest};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int w = ia.sigma[v];
    for (int i = 0; i < g.cartan.rank(); ++i) {
      int c = g.f(v, i);
      if (c == -1) continue;
      int target = g.f(w, a.vertex_map[i]);
      if (target == -1)
        throw std::logic_error("induced_automorphism: image edge missing at " +
                               g.verts[w].id);
      if (ia.sigma[c] == -1) {
        ia.sigma[c] = target;
        queue.push_back(c);
      } else if (ia.sigma[c] != target) {
        throw std::logic_error("induced_automorphism: inconsistent propagation at " +
                               g.verts[c].id);
      }
    }
  }
  for (int v = 0; v < g.size(); ++v)
    if (ia.sigma[v] == -1)
      throw std::invalid_argument("induced_automorphism: graph not connected from highest");

  // sigma is a crystal-map relabeling: check weight and eps transport, and
  // that its order divides the automorphism order.
  for (int v = 0; v < g.size(); ++v) {
    int w = ia.sigma[v];
    for (int i = 0; i < q.vertex_count(); ++i) {
      int ai = a.vertex_map[i];
      if (g.verts[w].wt.drop[ai] != g.verts[v].wt.drop[i] ||
          g.verts[w].wt.base[ai] != g.verts[v].wt.base[i])
        throw std::logic_error("induced_automorphism: wt(sigma b) != a(wt b)");
      if (g.verts[w].eps[ai] != g.verts[v].eps[i])
        throw std::logic_error("induced_automorphism: eps not transported");
    }
  }
  int ord = a.order();
  for (int v = 0; v < g.size(); ++v) {
    int w = v;
    for (int k = 0; k < ord; ++k) w = ia.sigma[w];
    if (w != v) throw std::logic_error("induced_automorphism: sigma^|a| != id");
  }
  return ia;
}

FoldedCrystal folded_crystal(const CrystalGraph& g, const FoldedDatum& fd,
                             FoldMode mode) {
  AdmissibilityReport adm = check_admissible(fd.source, fd.autom);
  if (!adm.admissible)
    throw std::invalid_argument("folded_crystal: automorphism not admissible");
  if (g.cartan.rank() != fd.source.vertex_count())
    throw std::invalid_argument("folded_crystal: graph is not over the source quiver");
  if (mode == FoldMode::highest_weight) {
    if (!g.lambda || !g.complete)
      throw std::invalid_argument("folded_crystal: need a complete B(w) source");
    if (!fd.invariant_vector(g.lambda->base))
      throw std::invalid_argument("folded_crystal: w is not a-invariant");
  }

  int norb = fd.orbit_count();
  FoldedCrystal fc;
  fc.graph.cartan = fd.cartan;
  if (mode == FoldMode::highest_weight && g.lambda)
    fc.graph.lambda = Weight{fd.fold_vector(g.lambda->base), Coeffs(norb, 0)};
  fc.graph.complete = g.complete;

  auto fold_vertex = [&](int sv) {
    const CrystalVertex& src = g.verts[sv];
    CrystalVertex out;
    out.id = src.id;
    if (!fd.invariant_weight(src.wt))
      throw std::logic_error("folded_crystal: reached element has non-invariant weight");
    out.wt = fd.fold_weight(src.wt);
    out.eps.resize(norb);
    out.phi.resize(norb);
    for (int o = 0; o < norb; ++o) {
      long long eps = src.eps[fd.orbits[o][0]];
      for (int i : fd.orbits[o])
        if (src.eps[i] != eps)
          throw std::logic_error("folded_crystal: eps differs inside orbit at " + src.id);
      out.eps[o] = eps;
      out.phi[o] = eps + fd.cartan.pairing(o, out.wt);
      // Cross-check the lift-and-average pairing against the folded Cartan.
      if (fd.pairing(o, out.wt) != fd.cartan.pairing(o, out.wt))
        throw std::logic_error("folded_crystal: pairing identity violated");
    }
    return out;
  };

  std::vector<int> folded_of(g.size(), -1);
  int top = fc.graph.add_vertex(fold_vertex(g.highest));
  fc.graph.highest = top;
  fc.source_vertex.push_back(g.highest);
  fc.source_height.push_back(g.verts[g.highest].wt.height());
  folded_of[g.highest] = top;

  std::deque<int> queue{g.highest};
  while (!queue.empty()) {
    int sv = queue.front();
    queue.pop_front();
    for (int o = 0; o < norb; ++o) {
      int child = orbit_f(g, sv, fd.orbits[o]);
      if (child == -1) continue;
      if (folded_of[child] == -1) {
        folded_of[child] = fc.graph.add_vertex(fold_vertex(child));
        fc.source_vertex.push_back(child);
        fc.source_height.push_back(g.verts[child].wt.height());
        queue.push_back(child);
      }
      fc.graph.add_edge(folded_of[sv], o, folded_of[child]);
      // e_orbit must invert f_orbit.
      if (orbit_e(g, child, fd.orbits[o]) != sv)
        throw std::logic_error("folded_crystal: orbit_e does not invert orbit_f");
    }
  }
  return fc;
}

Report check_fixed_equals_generated(const CrystalGraph& g,
                                    const InducedAutomorphism& ia,
                                    const FoldedCrystal& fc, FoldMode mode,
                                    long long depth) {
  Report rep;
  std::set<int> fixed;
  for (int v : ia.fixed_vertices()) {
    if (mode == FoldMode::infinity && depth >= 0 && g.verts[v].wt.height() > depth)
      continue;
    fixed.insert(v);
  }
  std::set<int> generated;
  for (size_t k = 0; k < fc.source_vertex.size(); ++k) {
    if (mode == FoldMode::infinity && depth >= 0 && fc.source_height[k] > depth)
      continue;
    generated.insert(fc.source_vertex[k]);
  }
  for (int v : fixed)
    if (!generated.count(v))
      rep.fail("sigma-fixed element " + g.verts[v].id + " not orbit-generated");
  for (int v : generated)
    if (!fixed.count(v))
      rep.fail("orbit-generated element " + g.verts[v].id + " not sigma-fixed");
  return rep;
}

Report verify_folded_is_target(const FoldedCrystal& fc, const FoldedDatum& fd,
                               FoldMode mode, const Weight* lambda_folded,
                               long long source_depth) {
  Report rep;
  rep.merge(verify_axioms(fc.graph));

  const CrystalGraph& fg = fc.graph;
  // Directly checkable characterization conditions: a unique element of the
  // top weight, integral nonnegative eps vanishing there, and an
  // e-predecessor for everything else.
  {
    const Weight& topw = fg.verts[fg.highest].wt;
    int count = 0;
    for (const CrystalVertex& v : fg.verts)
      if (v.wt == topw) ++count;
    if (count != 1) rep.fail("top weight is not unique");
    for (int o = 0; o < fd.orbit_count(); ++o)
      if (fg.verts[fg.highest].eps[o] != 0) rep.fail("eps(highest) != 0");
    for (int v = 0; v < fg.size(); ++v) {
      if (v == fg.highest) continue;
      bool has_pred = false;
      for (int o = 0; o < fd.orbit_count(); ++o)
        if (fg.e(v, o) != -1) has_pred = true;
      if (!has_pred)
        rep.fail("element " + fg.verts[v].id + " has no e-predecessor");
    }
  }

  if (mode == FoldMode::highest_weight) {
    if (!lambda_folded) {
      rep.fail("highest_weight verification needs the folded lambda");
      return rep;
    }
    CrystalGraph direct = generate_blambda(fd.cartan, *lambda_folded);
    if (!isomorphic(fg, direct))
      rep.fail("folded crystal is not isomorphic to the directly generated target");
  } else {
    // Per-weight counts against the Kostant oracle, over every folded weight
    // whose lift fits inside the source truncation.
    std::map<Coeffs, long long> counts;
    for (const CrystalVertex& v : fg.verts) counts[v.wt.drop] += 1;
    std::vector<Coeffs> roots = positive_roots(fd.cartan);
    long long bound = source_depth;
    if (bound < 0)
      for (long long h : fc.source_height) bound = std::max(bound, h);

    // Enumerate all drops with sum_o d_o * drop_o <= bound.
    std::vector<Coeffs> box{Coeffs(fd.orbit_count(), 0)};
    for (int o = 0; o < fd.orbit_count(); ++o) {
      std::vector<Coeffs> grown;
      for (const Coeffs& c : box) {
        long long used = 0;
        for (int p = 0; p < o; ++p) used += fd.cartan.d[p] * c[p];
        for (long long v = 0; used + fd.cartan.d[o] * v <= bound; ++v) {
          Coeffs c2 = c;
          c2[o] = v;
          grown.push_back(c2);
        }
      }
      box = std::move(grown);
    }
    for (const Coeffs& beta : box) {
      long long expect = kostant_count(fd.cartan, roots, beta);
      long long got = counts.count(beta) ? counts.at(beta) : 0;
      if (expect != got) {
        std::string bs;
        for (size_t i = 0; i < beta.size(); ++i)
          bs += (i ? "," : "") + std::to_string(beta[i]);
        rep.fail("weight -(" + bs + "): " + std::to_string(got) +
                 " elements, Kostant count " + std::to_string(expect));
      }
    }
  }
  return rep;
}

}  // namespace crystalfold
