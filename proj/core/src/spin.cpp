#include "crystalfold/spin.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystalfold {

YoungDiagram YoungDiagram::from_parts(int n, std::vector<int> parts) {
  if (int(parts.size()) > n)
    throw std::invalid_argument("young: more than n parts");
  parts.resize(n, 0);
  for (int i = 0; i < n; ++i) {
    if (parts[i] < 0 || parts[i] > n)
      throw std::invalid_argument("young: part outside the box");
    if (i && parts[i] > parts[i - 1])
      throw std::invalid_argument("young: parts must weakly decrease");
  }
  return YoungDiagram{n, std::move(parts)};
}

bool YoungDiagram::contains(int row, int col) const {
  return row >= 1 && row <= n && col >= 1 && col <= parts[row - 1];
}

int YoungDiagram::box_count() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string YoungDiagram::str() const {
  std::string s;
  for (int p : parts) {
    if (p == 0) break;
    if (!s.empty()) s += ",";
    s += std::to_string(p);
  }
  return s;
}

int degree(int n, int row, int col) {
  if (row < 1 || row > n || col < 1 || col > n)
    throw std::invalid_argument("degree: box outside the n x n box");
  return n + col - row;
}

std::optional<YoungDiagram> add_box(const YoungDiagram& y, int deg) {
  int n = y.n;
  if (deg < 1 || deg > 2 * n - 1) return std::nullopt;
  for (int r = 1; r <= n; ++r) {
    int c = y.parts[r - 1] + 1;  // the only addable column in row r
    if (c > n) continue;
    if (degree(n, r, c) != deg) continue;
    if (r > 1 && y.parts[r - 2] < c) return std::nullopt;  // would break monotonicity
    YoungDiagram out = y;
    out.parts[r - 1] = c;
    return out;
  }
  return std::nullopt;
}

std::optional<YoungDiagram> remove_box(const YoungDiagram& y, int deg) {
  int n = y.n;
  if (deg < 1 || deg > 2 * n - 1) return std::nullopt;
  for (int r = 1; r <= n; ++r) {
    int c = y.parts[r - 1];  // the only removable column in row r
    if (c == 0) continue;
    if (degree(n, r, c) != deg) continue;
    if (r < n && y.parts[r] == c) return std::nullopt;  // box below blocks it
    YoungDiagram out = y;
    out.parts[r - 1] = c - 1;
    return out;
  }
  return std::nullopt;
}

YoungDiagram conjugate(const YoungDiagram& y) {
  YoungDiagram out = YoungDiagram::empty(y.n);
  for (int i = 1; i <= y.n; ++i) {
    int cnt = 0;
    for (int p : y.parts)
      if (p >= i) ++cnt;
    out.parts[i - 1] = cnt;
  }
  return out;
}

bool self_conjugate(const YoungDiagram& y) { return conjugate(y) == y; }

std::vector<YoungDiagram> all_diagrams(int n) {
  std::vector<YoungDiagram> out;
  std::vector<int> parts(n, 0);
  // Enumerate weakly decreasing part vectors in the box, lexicographically.
  while (true) {
    out.push_back(YoungDiagram{n, parts});
    int i = n - 1;
    while (i >= 0) {
      int limit = (i == 0) ? n : parts[i - 1];
      if (parts[i] < limit) {
        ++parts[i];
        for (int j = i + 1; j < n; ++j) parts[j] = 0;
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<YoungDiagram> self_conjugate_set(int n) {
  std::vector<YoungDiagram> out;
  for (const YoungDiagram& y : all_diagrams(n))
    if (self_conjugate(y)) out.push_back(y);
  return out;
}

namespace {

void require_self_conjugate(const YoungDiagram& y, const char* op) {
  if (!self_conjugate(y))
    throw std::invalid_argument(std::string(op) + ": diagram is not self-conjugate");
  if (y.n < 1) throw std::invalid_argument(std::string(op) + ": empty box");
}

}  // namespace

std::optional<YoungDiagram> spin_f(const YoungDiagram& y, int k) {
  require_self_conjugate(y, "spin_f");
  int n = y.n;
  if (k < 1 || k > n) throw std::invalid_argument("spin_f: node out of range");
  if (k == n) return add_box(y, n);
  auto first = add_box(y, k);
  if (!first) return std::nullopt;
  return add_box(*first, 2 * n - k);
}

std::optional<YoungDiagram> spin_e(const YoungDiagram& y, int k) {
  require_self_conjugate(y, "spin_e");
  int n = y.n;
  if (k < 1 || k > n) throw std::invalid_argument("spin_e: node out of range");
  if (k == n) return remove_box(y, n);
  auto first = remove_box(y, k);
  if (!first) return std::nullopt;
  return remove_box(*first, 2 * n - k);
}

Weight spin_wt(const YoungDiagram& y) {
  require_self_conjugate(y, "spin_wt");
  int n = y.n;
  Weight w = Weight::zero(n);
  w.base[n - 1] = 1;  // omega at the short node
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= y.parts[r - 1]; ++c) {
      int deg = degree(n, r, c);
      int node = std::min(deg, 2 * n - deg);  // orbit {k, 2n-k}
      if (deg <= n) w.drop[node - 1] += 1;    // count each orbit once via f
    }
  return w;
}

int young_eps(const YoungDiagram& y, int deg) {
  int len = 0;
  YoungDiagram cur = y;
  while (auto up = remove_box(cur, deg)) {
    cur = *up;
    ++len;
  }
  return len;
}

int young_phi(const YoungDiagram& y, int deg) {
  int len = 0;
  YoungDiagram cur = y;
  while (auto dn = add_box(cur, deg)) {
    cur = *dn;
    ++len;
  }
  return len;
}

CrystalGraph build_spin_crystal(int n) {
  if (n < 1) throw std::invalid_argument("build_spin_crystal: n >= 1 required");
  CartanDatum bn = (n == 1) ? cartan_type('A', 1) : cartan_type('B', n);
  std::vector<YoungDiagram> ys = self_conjugate_set(n);

  CrystalGraph g;
  g.cartan = bn;
  g.lambda = Weight::fundamental(n, n - 1);
  g.complete = true;

  std::map<std::vector<int>, int> index;
  // Vertices sorted by (height, id) to match the generated-graph layout.
  std::stable_sort(ys.begin(), ys.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
    if (a.box_count() != b.box_count()) return a.box_count() < b.box_count();
    return a < b;
  });
  for (const YoungDiagram& y : ys) {
    CrystalVertex v;
    v.id = y.str();
    v.wt = spin_wt(y);
    v.eps.resize(n);
    v.phi.resize(n);
    for (int k = 1; k <= n; ++k) {
      long long e = 0;
      YoungDiagram cur = y;
      while (auto up = spin_e(cur, k)) {
        cur = *up;
        ++e;
      }
      long long f = 0;
      cur = y;
      while (auto dn = spin_f(cur, k)) {
        cur = *dn;
        ++f;
      }
      v.eps[k - 1] = e;
      v.phi[k - 1] = f;
    }
    index[y.parts] = g.add_vertex(std::move(v));
    if (y.box_count() == 0) g.highest = index[y.parts];
  }
  for (const YoungDiagram& y : ys)
    for (int k = 1; k <= n; ++k)
      if (auto dn = spin_f(y, k)) g.add_edge(index[y.parts], k - 1, index[dn->parts]);
  return g;
}

SpinMatrices chevalley_matrices(int n) {
  std::vector<YoungDiagram> ys = self_conjugate_set(n);
  int dim = int(ys.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < dim; ++i) index[ys[i].parts] = i;
  CartanDatum bn = (n == 1) ? cartan_type('A', 1) : cartan_type('B', n);

  SpinMatrices sm;
  sm.n = n;
  for (int k = 1; k <= n; ++k) {
    IMat E(dim, dim), F(dim, dim), H(dim, dim);
    for (int j = 0; j < dim; ++j) {
      if (auto up = spin_e(ys[j], k)) E.at(index.at(up->parts), j) = 1;
      if (auto dn = spin_f(ys[j], k)) F.at(index.at(dn->parts), j) = 1;
      H.at(j, j) = bn.pairing(k - 1, spin_wt(ys[j]));
    }
    sm.E.push_back(std::move(E));
    sm.F.push_back(std::move(F));
    sm.H.push_back(std::move(H));
  }
  return sm;
}

Report verify_relations(const SpinMatrices& sm, const CartanDatum& bn) {
  Report rep;
  int n = sm.n;
  auto node = [&](int k) { return std::to_string(k + 1); };
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (!IMat::commutator(sm.H[k], sm.H[l]).is_zero())
        rep.fail("[H" + node(k) + ",H" + node(l) + "] != 0");
      IMat ef = IMat::commutator(sm.E[k], sm.F[l]);
      if (k == l) {
        if (!(ef == sm.H[k])) rep.fail("[E" + node(k) + ",F" + node(k) + "] != H");
      } else if (!ef.is_zero()) {
        rep.fail("[E" + node(k) + ",F" + node(l) + "] != 0");
      }
      long long c = bn.c(k, l);
      if (!(IMat::commutator(sm.H[k], sm.E[l]) == sm.E[l].scaled(c)))
        rep.fail("[H" + node(k) + ",E" + node(l) + "] != c E");
      if (!(IMat::commutator(sm.H[k], sm.F[l]) == sm.F[l].scaled(-c)))
        rep.fail("[H" + node(k) + ",F" + node(l) + "] != -c F");
      if (k != l) {
        // ad(X_k)^{1-c_kl} X_l = 0
        IMat adE = sm.E[l], adF = sm.F[l];
        for (long long it = 0; it < 1 - c; ++it) {
          adE = IMat::commutator(sm.E[k], adE);
          adF = IMat::commutator(sm.F[k], adF);
        }
        if (!adE.is_zero()) rep.fail("Serre relation fails for E" + node(k) + ",E" + node(l));
        if (!adF.is_zero()) rep.fail("Serre relation fails for F" + node(k) + ",F" + node(l));
      }
    }
  return rep;
}

NakajimaPoint rep_from_young(const YoungDiagram& y) {
  int n = y.n;
  Quiver q = path_quiver(2 * n - 1);

  // Basis of V_k: boxes of degree k in row order.
  std::vector<std::vector<std::pair<int, int>>> basis(2 * n - 1);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= y.parts[r - 1]; ++c)
      basis[degree(n, r, c) - 1].push_back({r, c});
  auto find_box = [&](int k, int r, int c) {
    const auto& b = basis[k - 1];
    for (int i = 0; i < int(b.size()); ++i)
      if (b[i] == std::make_pair(r, c)) return i;
    return -1;
  };

  std::vector<int> dims(2 * n - 1);
  for (int k = 0; k < 2 * n - 1; ++k) dims[k] = int(basis[k].size());
  QuiverRep rep = QuiverRep::zero(q, dims);

  for (int k = 1; k <= 2 * n - 1; ++k) {
    for (int i = 0; i < dims[k - 1]; ++i) {
      auto [r, c] = basis[k - 1][i];
      if (c > 1) {
        // Left map, degree k -> k-1, unit coefficient; (r, c-1) is always in
        // the diagram.
        int h = -1;
        for (int cand : q.arrows_out_of(k - 1))
          if (q.arrow(cand).inc == k - 2) h = cand;
        rep.x[h].at(find_box(k - 1, r, c - 1), i) = 1;
      }
      if (r > 1) {
        // Up map, degree k -> k+1, coefficient eps(h).
        int h = -1;
        for (int cand : q.arrows_out_of(k - 1))
          if (q.arrow(cand).inc == k) h = cand;
        rep.x[h].at(find_box(k + 1, r - 1, c), i) = q.sign(h);
      }
    }
  }

  NakajimaPoint p;
  p.rep = std::move(rep);
  p.wdims.assign(2 * n - 1, 0);
  p.wdims[n - 1] = 1;
  for (int k = 0; k < 2 * n - 1; ++k) p.t.emplace_back(p.wdims[k], dims[k]);
  if (y.contains(1, 1)) p.t[n - 1].at(0, find_box(n, 1, 1)) = 1;
  p.validate();
  return p;
}

}  // namespace crystalfold
