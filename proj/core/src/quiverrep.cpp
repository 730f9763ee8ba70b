#include "crystalfold/quiverrep.hpp"

#include <numeric>
#include <stdexcept>

namespace crystalfold {

QuiverRep QuiverRep::zero(const Quiver& q, std::vector<int> dims) {
  QuiverRep r;
  r.quiver = q;
  r.dims = std::move(dims);
  for (int h = 0; h < q.arrow_count(); ++h) {
    Arrow a = q.arrow(h);
    r.x.emplace_back(r.dims[a.inc], r.dims[a.out]);
  }
  r.validate();
  return r;
}

void QuiverRep::validate() const {
  if (int(dims.size()) != quiver.vertex_count() ||
      int(x.size()) != quiver.arrow_count())
    throw std::invalid_argument("rep: shape mismatch");
  for (int d : dims)
    if (d < 0) throw std::invalid_argument("rep: negative dimension");
  for (int h = 0; h < quiver.arrow_count(); ++h) {
    Arrow a = quiver.arrow(h);
    if (x[h].rows() != dims[a.inc] || x[h].cols() != dims[a.out])
      throw std::invalid_argument("rep: matrix shape mismatch on an arrow");
  }
}

void NakajimaPoint::validate() const {
  rep.validate();
  if (int(wdims.size()) != rep.quiver.vertex_count() ||
      int(t.size()) != rep.quiver.vertex_count())
    throw std::invalid_argument("point: shape mismatch");
  for (int v = 0; v < rep.quiver.vertex_count(); ++v)
    if (t[v].rows() != wdims[v] || t[v].cols() != rep.dims[v])
      throw std::invalid_argument("point: t shape mismatch");
}

std::vector<bool> moment_check(const QuiverRep& r) {
  const Quiver& q = r.quiver;
  std::vector<bool> ok(q.vertex_count(), true);
  for (int v = 0; v < q.vertex_count(); ++v) {
    QMat psi(r.dims[v], r.dims[v]);
    for (int h : q.arrows_into(v))
      psi = psi + (r.x[h] * r.x[Quiver::bar(h)]).scaled(q.sign(h));
    ok[v] = psi.is_zero();
  }
  return ok;
}

bool moment_check_all(const QuiverRep& r) {
  for (bool b : moment_check(r))
    if (!b) return false;
  return true;
}

namespace {

// Depth-first over arrow paths, extending the composition on the right and
// pruning as soon as it vanishes.
bool has_long_nonzero_path(const QuiverRep& r, const QMat& acc, int tail_vertex,
                           int remaining) {
  if (remaining == 0) return true;
  for (int h : r.quiver.arrows_into(tail_vertex)) {
    // acc is x_{h1}...x_{hk} with out(hk) = tail_vertex; append x_h with
    // inc(h) = tail_vertex.
    QMat next = acc * r.x[h];
    if (next.is_zero()) continue;
    if (has_long_nonzero_path(r, next, r.quiver.arrow(h).out, remaining - 1))
      return true;
  }
  return false;
}

}  // namespace

bool nilpotency_check(const QuiverRep& r) {
  int total = std::accumulate(r.dims.begin(), r.dims.end(), 0);
  int n = total + 1;  // a nonzero composition this long forces a repeated flag
  for (int h = 0; h < r.quiver.arrow_count(); ++h) {
    if (r.x[h].is_zero()) continue;
    if (has_long_nonzero_path(r, r.x[h], r.quiver.arrow(h).out, n - 1))
      return false;
  }
  return true;
}

int epsilon_geom(const QuiverRep& r, int vertex) {
  QMat stacked(r.dims[vertex], 0);
  for (int h : r.quiver.arrows_into(vertex)) stacked = stacked.hcat(r.x[h]);
  return r.dims[vertex] - stacked.rank();
}

int epsilon_geom(const NakajimaPoint& p, int vertex) {
  return epsilon_geom(p.rep, vertex);
}

bool stability_check(const NakajimaPoint& p) {
  const Quiver& q = p.rep.quiver;
  int n = q.vertex_count();
  // Bases (columns) of the current graded subspace, in ambient coordinates.
  std::vector<QMat> s(n);
  for (int v = 0; v < n; ++v) s[v] = p.t[v].kernel().column_space();

  int total = std::accumulate(p.rep.dims.begin(), p.rep.dims.end(), 0);
  int last = -1;
  for (int iter = 0; iter <= total; ++iter) {
    int dim_sum = 0;
    for (int v = 0; v < n; ++v) dim_sum += s[v].cols();
    if (dim_sum == last) break;  // fixpoint
    if (last >= 0 && dim_sum > last)
      throw std::logic_error("stability fixpoint is not decreasing");
    last = dim_sum;
    if (dim_sum == 0) break;

    std::vector<QMat> next(n);
    for (int v = 0; v < n; ++v) {
      int k = s[v].cols();
      if (k == 0) {
        next[v] = QMat(p.rep.dims[v], 0);
        continue;
      }
      // Solve for c with x_h s[v] c in span(s[inc h]) for all h out of v:
      // stack [x_h s[v] | -s[inc h]] blocks over a shared c.
      std::vector<int> hs = q.arrows_out_of(v);
      int extra = 0;
      int rows = 0;
      for (int h : hs) {
        extra += s[q.arrow(h).inc].cols();
        rows += p.rep.dims[q.arrow(h).inc];
      }
      QMat sys(rows, k + extra);
      int row0 = 0, col0 = k;
      for (int h : hs) {
        int w = q.arrow(h).inc;
        QMat lhs = p.rep.x[h] * s[v];
        for (int i = 0; i < lhs.rows(); ++i) {
          for (int j = 0; j < k; ++j) sys.at(row0 + i, j) = lhs.at(i, j);
          for (int j = 0; j < s[w].cols(); ++j)
            sys.at(row0 + i, col0 + j) = -s[w].at(i, j);
        }
        row0 += p.rep.dims[w];
        col0 += s[w].cols();
      }
      QMat ker = sys.kernel();
      QMat proj(k, ker.cols());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < ker.cols(); ++j) proj.at(i, j) = ker.at(i, j);
      next[v] = (s[v] * proj).column_space();
    }
    s = std::move(next);
  }
  for (int v = 0; v < n; ++v)
    if (s[v].cols() != 0) return false;
  return true;
}

QuiverRep apply_Fa(const QuiverRep& r, const Automorphism& a) {
  QuiverRep out;
  out.quiver = r.quiver;
  out.dims.resize(r.dims.size());
  for (int v = 0; v < int(r.dims.size()); ++v)
    out.dims[v] = r.dims[a.inverse_vertex(v)];
  out.x.resize(r.x.size());
  for (int h = 0; h < r.quiver.arrow_count(); ++h)
    out.x[h] = r.x[a.inverse_arrow(r.quiver, h)];
  out.validate();  // rejects incompatible shapes
  return out;
}

NakajimaPoint apply_Fa(const NakajimaPoint& p, const Automorphism& a) {
  for (int v = 0; v < int(p.wdims.size()); ++v)
    if (p.wdims[v] != p.wdims[a.vertex_map[v]])
      throw std::invalid_argument("apply_Fa: w is not a-invariant");
  NakajimaPoint out;
  out.rep = apply_Fa(p.rep, a);
  out.wdims = p.wdims;
  out.t.resize(p.t.size());
  for (int v = 0; v < int(p.t.size()); ++v) out.t[v] = p.t[a.inverse_vertex(v)];
  out.validate();
  return out;
}

namespace {

// Walk all arrow paths of both representations in lockstep, comparing ranks;
// prune once both compositions vanish.
bool ranks_agree(const QuiverRep& r1, const QuiverRep& r2, const QMat& m1,
                 const QMat& m2, int tail_vertex, int remaining) {
  if (m1.rank() != m2.rank()) return false;
  if (remaining == 0) return true;
  if (m1.is_zero() && m2.is_zero()) return true;
  for (int h : r1.quiver.arrows_into(tail_vertex)) {
    int out_v = r1.quiver.arrow(h).out;
    if (!ranks_agree(r1, r2, m1 * r1.x[h], m2 * r2.x[h], out_v, remaining - 1))
      return false;
  }
  return true;
}

}  // namespace

bool reps_isomorphic(const QuiverRep& r1, const QuiverRep& r2) {
  if (!r1.quiver.is_path())
    throw std::invalid_argument("reps_isomorphic: only supported over type A quivers");
  if (r1.quiver.vertex_count() != r2.quiver.vertex_count() ||
      r1.quiver.edge_count() != r2.quiver.edge_count())
    throw std::invalid_argument("reps_isomorphic: different quivers");
  if (!nilpotency_check(r1) || !nilpotency_check(r2))
    throw std::invalid_argument("reps_isomorphic: criterion needs nilpotent input");
  if (r1.dims != r2.dims) return false;
  int total = std::accumulate(r1.dims.begin(), r1.dims.end(), 0);
  for (int h = 0; h < r1.quiver.arrow_count(); ++h) {
    if (!ranks_agree(r1, r2, r1.x[h], r2.x[h], r1.quiver.arrow(h).out, total))
      return false;
  }
  return true;
}

}  // namespace crystalfold
