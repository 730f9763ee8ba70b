#include "crystalfold/fold.hpp"

#include <cassert>
#include <stdexcept>

namespace crystalfold {

AdmissibilityReport check_admissible(const Quiver& q, const Automorphism& a) {
  AdmissibilityReport rep;
  auto orbits = a.vertex_orbits();
  std::vector<int> orbit_of(q.vertex_count());
  for (int o = 0; o < int(orbits.size()); ++o)
    for (int v : orbits[o]) orbit_of[v] = o;
  for (int e = 0; e < q.edge_count(); ++e) {
    const Edge& ed = q.edge(e);
    if (orbit_of[ed.a] == orbit_of[ed.b]) {
      rep.admissible = false;
      rep.offending_edges.push_back(e);
      rep.report.fail("edge {" + q.vertex_name(ed.a) + "," + q.vertex_name(ed.b) +
                      "} joins two vertices of one orbit");
    }
  }
  return rep;
}

FoldedDatum fold(const Quiver& q, const Automorphism& a) {
  AdmissibilityReport adm = check_admissible(q, a);
  if (!adm.admissible)
    throw std::invalid_argument("fold: automorphism is not admissible:\n" +
                                adm.report.str());

  FoldedDatum fd;
  fd.source = q;
  fd.autom = a;
  fd.source_cartan = cartan_from_quiver(q);
  fd.orbits = a.vertex_orbits();
  fd.orbit_of.assign(q.vertex_count(), -1);
  for (int o = 0; o < int(fd.orbits.size()); ++o)
    for (int v : fd.orbits[o]) fd.orbit_of[v] = o;

  int n = fd.orbit_count();
  std::vector<Coeffs> m(n, Coeffs(n, 0));
  for (int o = 0; o < n; ++o) m[o][o] = 2 * (long long)fd.orbits[o].size();
  for (int e = 0; e < q.edge_count(); ++e) {
    int oa = fd.orbit_of[q.edge(e).a], ob = fd.orbit_of[q.edge(e).b];
    m[oa][ob] -= 1;
    m[ob][oa] -= 1;
  }

  CartanDatum& cd = fd.cartan;
  for (int o = 0; o < n; ++o) {
    std::string name;
    for (size_t k = 0; k < fd.orbits[o].size(); ++k) {
      if (k) name += ",";
      name += q.vertex_name(fd.orbits[o][k]);
    }
    cd.nodes.push_back(name);
    cd.d.push_back((long long)fd.orbits[o].size());
  }
  cd.a.assign(n, Coeffs(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // C = D^{-1} M; integrality holds for admissible automorphisms because
      // the edges between two orbits fall into free a-orbits of size d_i.
      assert(m[i][j] % cd.d[i] == 0);
      cd.a[i][j] = m[i][j] / cd.d[i];
    }
  cd.validate();
  return fd;
}

Coeffs FoldedDatum::fold_vector(const Coeffs& x) const {
  if (int(x.size()) != source.vertex_count())
    throw std::invalid_argument("fold_vector: wrong length");
  if (!invariant_vector(x))
    throw std::invalid_argument("fold_vector: vector is not a-invariant");
  Coeffs y(orbit_count());
  for (int o = 0; o < orbit_count(); ++o) y[o] = x[orbits[o][0]];
  return y;
}

Coeffs FoldedDatum::unfold_vector(const Coeffs& y) const {
  if (int(y.size()) != orbit_count())
    throw std::invalid_argument("unfold_vector: wrong length");
  Coeffs x(source.vertex_count());
  for (int o = 0; o < orbit_count(); ++o)
    for (int v : orbits[o]) x[v] = y[o];
  return x;
}

Weight FoldedDatum::fold_weight(const Weight& w) const {
  return Weight{fold_vector(w.base), fold_vector(w.drop)};
}

Weight FoldedDatum::unfold_weight(const Weight& w) const {
  return Weight{unfold_vector(w.base), unfold_vector(w.drop)};
}

bool FoldedDatum::invariant_vector(const Coeffs& x) const {
  for (int v = 0; v < source.vertex_count(); ++v)
    if (x[v] != x[autom.vertex_map[v]]) return false;
  return true;
}

bool FoldedDatum::invariant_weight(const Weight& w) const {
  return invariant_vector(w.base) && invariant_vector(w.drop);
}

long long FoldedDatum::pairing(int orbit, const Weight& folded_wt) const {
  Weight lifted = unfold_weight(folded_wt);
  long long sum = 0;
  for (int v : orbits[orbit]) sum += source_cartan.pairing(v, lifted);
  long long di = (long long)orbits[orbit].size();
  assert(sum % di == 0);
  return sum / di;
}

}  // namespace crystalfold
