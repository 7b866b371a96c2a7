#include "qflag/dmod.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "qflag/linalg.hpp"

namespace qflag {

using linalg::SpanBuilder;

void check_rep(const Rep& m) {
  if (m.n < 1) throw std::invalid_argument("rep: n must be positive");
  if (static_cast<int>(m.dims.size()) != m.n)
    throw std::invalid_argument("rep: dims size mismatch");
  for (int d : m.dims)
    if (d < 0) throw std::invalid_argument("rep: negative dimension");
  if (static_cast<int>(m.a.size()) != m.n || static_cast<int>(m.b.size()) != m.n)
    throw std::invalid_argument("rep: arrow slot count mismatch");
  for (int v = 1; v < m.n; ++v) {
    if (m.a[v].rows() != m.dims[v - 1] || m.a[v].cols() != m.dims[v])
      throw std::invalid_argument("rep: arrow a shape mismatch");
    if (m.b[v].rows() != m.dims[v] || m.b[v].cols() != m.dims[v - 1])
      throw std::invalid_argument("rep: arrow b shape mismatch");
  }
  if (m.algebra == Algebra::Pi && m.dims[0] != 0)
    throw std::invalid_argument("rep: truncated algebra requires empty vertex 0");
  if (m.n >= 2 && !linalg::is_zero(MatQ(m.b[m.n - 1] * m.a[m.n - 1])))
    throw std::invalid_argument("rep: top relation fails");
  for (int v = 1; v + 1 < m.n; ++v)
    if (!linalg::is_zero(MatQ(m.a[v + 1] * m.b[v + 1] - m.b[v] * m.a[v])))
      throw std::invalid_argument("rep: commuting-square relation fails");
}

Rep zero_rep(int n, Algebra alg) {
  Rep m;
  m.algebra = alg;
  m.n = n;
  m.dims.assign(n, 0);
  m.a.assign(n, MatQ(0, 0));
  m.b.assign(n, MatQ(0, 0));
  check_rep(m);
  return m;
}

int total_dim(const Rep& m) {
  return std::accumulate(m.dims.begin(), m.dims.end(), 0);
}

bool is_zero_rep(const Rep& m) { return total_dim(m) == 0; }

Rep build_D0(int n) { return build_rank_one(n, make_kset(n, [&] {
                        std::vector<int> all(n);
                        std::iota(all.begin(), all.end(), 1);
                        return all;
                      }())); }

Rep build_rank_one(int n, const KSet& I) {
  if (I.n != n) throw std::invalid_argument("rank one: ambient mismatch");
  check_kset(I);
  Rep m;
  m.n = n;
  m.dims.resize(n);
  std::vector<int> d(n + 1, 0), lo(n, 0);
  for (int v = 0; v < n; ++v) {
    d[v] = 0;
    for (int x : I.elems)
      if (x > v) ++d[v];
    m.dims[v] = d[v];
    lo[v] = n - v - d[v];
  }
  m.a.assign(n, MatQ(0, 0));
  m.b.assign(n, MatQ(0, 0));
  for (int v = 1; v < n; ++v) {
    MatQ A = MatQ::Zero(d[v - 1], d[v]);
    for (int l = 0; l < d[v]; ++l) {
      int s = lo[v] + l;
      int lp = s + 1 - lo[v - 1];
      assert(lp >= 0 && lp < d[v - 1]);
      A(lp, l) = 1;
    }
    m.a[v] = A;
    MatQ B = MatQ::Zero(d[v], d[v - 1]);
    for (int l = 0; l < d[v - 1]; ++l) {
      int s = lo[v - 1] + l;
      if (s <= n - v - 1) {
        assert(s >= lo[v]);
        B(s - lo[v], l) = 1;
      }
    }
    m.b[v] = B;
  }
  check_rep(m);
  return m;
}

Rep build_T(int n, int j) {
  if (j < 0 || j > n) throw std::invalid_argument("build_T: j out of range");
  std::vector<int> e(j);
  std::iota(e.begin(), e.end(), 1);
  return build_rank_one(n, make_kset(n, std::move(e)));
}

Rep build_proj(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("build_proj: vertex out of range");
  std::vector<int> e(n - i);
  std::iota(e.begin(), e.end(), i + 1);
  return build_rank_one(n, make_kset(n, std::move(e)));
}

Rep build_simple(int n, int v, Algebra alg) {
  if (v < 0 || v >= n) throw std::invalid_argument("build_simple: vertex out of range");
  Rep m = zero_rep(n, Algebra::D);
  m.dims[v] = 1;
  for (int u = 1; u < n; ++u) {
    m.a[u] = MatQ::Zero(m.dims[u - 1], m.dims[u]);
    m.b[u] = MatQ::Zero(m.dims[u], m.dims[u - 1]);
  }
  m.algebra = alg;
  check_rep(m);
  return m;
}

Rep as_algebra(Rep m, Algebra alg) {
  m.algebra = alg;
  check_rep(m);
  return m;
}

Rep direct_sum(const std::vector<Rep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
  Rep out;
  out.algebra = parts[0].algebra;
  out.n = parts[0].n;
  out.dims.assign(out.n, 0);
  for (const auto& p : parts) {
    if (p.n != out.n || p.algebra != out.algebra)
      throw std::invalid_argument("direct_sum: incompatible parts");
    for (int v = 0; v < out.n; ++v) out.dims[v] += p.dims[v];
  }
  out.a.assign(out.n, MatQ(0, 0));
  out.b.assign(out.n, MatQ(0, 0));
  for (int v = 1; v < out.n; ++v) {
    MatQ A = MatQ::Zero(out.dims[v - 1], out.dims[v]);
    MatQ B = MatQ::Zero(out.dims[v], out.dims[v - 1]);
    int ra = 0, ca = 0;
    for (const auto& p : parts) {
      A.block(ra, ca, p.dims[v - 1], p.dims[v]) = p.a[v];
      B.block(ca, ra, p.dims[v], p.dims[v - 1]) = p.b[v];
      ra += p.dims[v - 1];
      ca += p.dims[v];
    }
    out.a[v] = A;
    out.b[v] = B;
  }
  check_rep(out);
  return out;
}

RepMap compose(const RepMap& g, const RepMap& f) {
  RepMap h(g.size());
  for (size_t v = 0; v < g.size(); ++v) h[v] = g[v] * f[v];
  return h;
}

RepMap identity_map(const Rep& m) {
  RepMap id(m.n);
  for (int v = 0; v < m.n; ++v) id[v] = MatQ::Identity(m.dims[v], m.dims[v]);
  return id;
}

namespace {

// Union-find over variables with multiplicative weights: x = w[x] * parent.
struct RatUF {
  std::vector<int> par;
  std::vector<Rat> w;
  std::vector<char> zero;  // meaningful on roots

  explicit RatUF(int n) : par(n), w(n, Rat(1)), zero(n, 0) {
    std::iota(par.begin(), par.end(), 0);
  }

  std::pair<int, Rat> find(int x) {
    int r = x;
    std::vector<int> path;
    while (par[r] != r) {
      path.push_back(r);
      r = par[r];
    }
    for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
      int y = path[i];
      if (par[y] != r) {
        w[y] *= w[par[y]];
        par[y] = r;
      }
    }
    return {r, x == r ? Rat(1) : w[x]};
  }

  void mark_zero(int x) { zero[find(x).first] = 1; }

  // Enforce c1*r1 + c2*r2 = 0 for distinct roots.
  void merge(int r1, const Rat& c1, int r2, const Rat& c2) {
    par[r1] = r2;
    w[r1] = -c2 / c1;
    zero[r2] = zero[r2] | zero[r1];
  }
};

using Term = std::pair<int, Rat>;
using Equation = std::vector<Term>;

// Rewrites an equation over current roots, dropping killed variables.
Equation normalize_eq(RatUF& uf, const Equation& eq) {
  Equation acc;
  for (const auto& [x, c] : eq) {
    auto [r, ratio] = uf.find(x);
    if (uf.zero[r]) continue;
    acc.emplace_back(r, c * ratio);
  }
  std::sort(acc.begin(), acc.end(),
            [](const Term& s, const Term& t) { return s.first < t.first; });
  Equation out;
  for (const auto& t : acc) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Term& t) { return t.second == 0; }),
            out.end());
  return out;
}

}  // namespace

HomSpace hom_space(const Rep& M, const Rep& N) {
  if (M.n != N.n || M.algebra != N.algebra)
    throw std::invalid_argument("hom_space: incompatible representations");
  const int n = M.n;
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  const int V = off[n];
  std::vector<int> var_vertex(V);
  for (int v = 0; v < n; ++v)
    for (int x = off[v]; x < off[v + 1]; ++x) var_vertex[x] = v;
  auto var = [&](int v, int r, int c) { return off[v] + r * M.dims[v] + c; };

  std::vector<Equation> eqs;
  auto add_arrow = [&](int u, int vt, const MatQ& Am, const MatQ& An) {
    // phi_vt * Am = An * phi_u as maps M(u) -> N(vt)
    for (int r = 0; r < N.dims[vt]; ++r)
      for (int c = 0; c < M.dims[u]; ++c) {
        Equation eq;
        for (int s = 0; s < M.dims[vt]; ++s)
          if (Am(s, c) != 0) eq.emplace_back(var(vt, r, s), Am(s, c));
        for (int s = 0; s < N.dims[u]; ++s)
          if (An(r, s) != 0) eq.emplace_back(var(u, s, c), -An(r, s));
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
  };
  for (int v = 1; v < n; ++v) {
    add_arrow(v, v - 1, M.a[v], N.a[v]);
    add_arrow(v - 1, v, M.b[v], N.b[v]);
  }

  RatUF uf(V);
  std::vector<Equation> deferred;
  auto process = [&](const Equation& raw) -> bool {
    Equation eq = normalize_eq(uf, raw);
    if (eq.empty()) return true;
    if (eq.size() == 1) {
      uf.mark_zero(eq[0].first);
      return true;
    }
    if (eq.size() == 2) {
      auto [r1, c1] = eq[0];
      auto [r2, c2] = eq[1];
      uf.merge(r1, c1, r2, c2);
      return true;
    }
    deferred.push_back(std::move(eq));
    return false;
  };
  for (const auto& eq : eqs) process(eq);
  for (int round = 0; round < 1000; ++round) {
    std::vector<Equation> pending;
    pending.swap(deferred);
    bool progress = false;
    for (const auto& eq : pending)
      if (process(eq)) progress = true;
    if (!progress || deferred.empty()) break;
  }

  // Dense residue over the surviving roots.
  std::vector<int> live;
  std::vector<int> colidx(V, -1);
  for (int x = 0; x < V; ++x) {
    auto [r, ratio] = uf.find(x);
    (void)ratio;
    if (r == x && !uf.zero[r]) {
      colidx[x] = static_cast<int>(live.size());
      live.push_back(x);
    }
  }
  const int C = static_cast<int>(live.size());
  MatQ R(0, 0);
  std::vector<int> piv;
  int rk = 0;
  {
    std::vector<Equation> rows;
    for (const auto& eq : deferred) {
      Equation e = normalize_eq(uf, eq);
      if (e.size() == 1) {
        uf.mark_zero(e[0].first);
        continue;
      }
      if (!e.empty()) rows.push_back(std::move(e));
    }
    // late zero marks can invalidate earlier normalizations; re-run once
    R = MatQ::Zero(static_cast<int>(rows.size()), C);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
      for (const auto& [r, c] : normalize_eq(uf, rows[i]))
        if (colidx[r] >= 0) R(i, colidx[r]) += c;
    rk = linalg::rref_inplace(R, &piv);
  }
  std::vector<char> live_dead(C, 0);
  for (int c = 0; c < C; ++c) {
    auto [r, ratio] = uf.find(live[c]);
    (void)ratio;
    if (uf.zero[r] || r != live[c]) live_dead[c] = 1;
  }
  std::vector<char> is_piv(C, 0);
  std::vector<int> row_of(C, -1);
  for (int i = 0; i < rk; ++i) {
    is_piv[piv[i]] = 1;
    row_of[piv[i]] = i;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < C; ++c)
    if (!is_piv[c] && !live_dead[c]) free_cols.push_back(c);

  HomSpace H;
  H.dim = static_cast<int>(free_cols.size());
  H.basis.assign(H.dim, RepMap(n));
  for (int k = 0; k < H.dim; ++k)
    for (int v = 0; v < n; ++v)
      H.basis[k][v] = MatQ::Zero(N.dims[v], M.dims[v]);
  std::vector<int> free_index(C, -1);
  for (int k = 0; k < H.dim; ++k) free_index[free_cols[k]] = k;

  for (int x = 0; x < V; ++x) {
    auto [r, ratio] = uf.find(x);
    if (uf.zero[r]) continue;
    int rc = colidx[r];
    assert(rc >= 0);
    int v = var_vertex[x];
    int loc = x - off[v];
    int row = loc / M.dims[v];
    int col = loc % M.dims[v];
    if (!is_piv[rc]) {
      int k = free_index[rc];
      if (k >= 0) H.basis[k][v](row, col) = ratio;
    } else {
      int i = row_of[rc];
      for (int k = 0; k < H.dim; ++k) {
        const Rat& coef = R(i, free_cols[k]);
        if (coef != 0) H.basis[k][v](row, col) = -coef * ratio;
      }
    }
  }
  H.coords.resize(H.dim);
  for (int k = 0; k < H.dim; ++k) {
    int x = live[free_cols[k]];
    int v = var_vertex[x];
    int loc = x - off[v];
    H.coords[k] = {v, loc / M.dims[v], loc % M.dims[v]};
  }
  return H;
}

int dim_hom(const Rep& M, const Rep& N) { return hom_space(M, N).dim; }

std::vector<Rat> hom_coords(const HomSpace& H, const RepMap& f) {
  std::vector<Rat> out(H.dim);
  for (int k = 0; k < H.dim; ++k)
    out[k] = f[H.coords[k][0]](H.coords[k][1], H.coords[k][2]);
  return out;
}

RepMap hom_lincomb(const HomSpace& H, const std::vector<Rat>& coeffs) {
  if (static_cast<int>(coeffs.size()) != H.dim)
    throw std::invalid_argument("hom_lincomb: coefficient count mismatch");
  if (H.dim == 0) throw std::invalid_argument("hom_lincomb: empty space");
  RepMap f(H.basis[0].size());
  for (size_t v = 0; v < f.size(); ++v) {
    f[v] = MatQ::Zero(H.basis[0][v].rows(), H.basis[0][v].cols());
    for (int k = 0; k < H.dim; ++k)
      if (coeffs[k] != 0) f[v] += coeffs[k] * H.basis[k][v];
  }
  return f;
}

bool is_isomorphic(const Rep& M, const Rep& N) {
  if (M.n != N.n || M.algebra != N.algebra || M.dims != N.dims) return false;
  if (total_dim(M) == 0) return true;
  HomSpace H = hom_space(M, N);
  if (H.dim == 0) return false;
  for (long t = 0; t <= 1000; ++t) {
    std::vector<Rat> coef(H.dim);
    Rat p(1);
    for (int k = 0; k < H.dim; ++k) {
      coef[k] = p;
      p *= t;
    }
    RepMap f = hom_lincomb(H, coef);
    bool inv = true;
    for (int v = 0; v < M.n && inv; ++v)
      if (linalg::rank(f[v]) != M.dims[v]) inv = false;
    if (inv) return true;
  }
  return false;
}

TraceResult trace_eta(const Rep& m) {
  const int n = m.n;
  std::vector<SpanBuilder> sb;
  sb.reserve(n);
  for (int v = 0; v < n; ++v) sb.emplace_back(m.dims[v]);
  std::queue<std::pair<int, VecQ>> work;
  for (int i = 0; i < m.dims[0]; ++i) {
    VecQ e = VecQ::Zero(m.dims[0]);
    e(i) = 1;
    if (sb[0].add(e)) work.emplace(0, e);
  }
  while (!work.empty()) {
    auto [v, x] = work.front();
    work.pop();
    if (v >= 1) {
      VecQ y = m.a[v] * x;
      if (sb[v - 1].add(y)) work.emplace(v - 1, y);
    }
    if (v + 1 < n) {
      VecQ y = m.b[v + 1] * x;
      if (sb[v + 1].add(y)) work.emplace(v + 1, y);
    }
  }
  TraceResult out;
  out.inclusion.resize(n);
  for (int v = 0; v < n; ++v) out.inclusion[v] = sb[v].basis_matrix();
  out.sub = restrict_to(m, out.inclusion);
  auto delta = delta_dims(out.sub);
  out.t_mult.assign(n, 0);
  for (int i = 1; i <= n; ++i) {
    long long next = i < n ? delta[i] : 0;
    long long c = delta[i - 1] - next;
    if (delta[i - 1] < 0 || c < 0)
      throw std::domain_error("trace_eta: trace is not a staircase sum");
    out.t_mult[i - 1] = static_cast<int>(c);
  }
  return out;
}

Rep restrict_to(const Rep& m, const std::vector<MatQ>& bases) {
  if (static_cast<int>(bases.size()) != m.n)
    throw std::invalid_argument("restrict_to: basis count mismatch");
  Rep out;
  out.algebra = m.algebra;
  out.n = m.n;
  out.dims.resize(m.n);
  for (int v = 0; v < m.n; ++v) out.dims[v] = static_cast<int>(bases[v].cols());
  for (int v = 0; v < m.n; ++v)
    if (bases[v].rows() != m.dims[v])
      throw std::invalid_argument("restrict_to: basis shape mismatch");
  out.a.assign(m.n, MatQ(0, 0));
  out.b.assign(m.n, MatQ(0, 0));
  for (int v = 1; v < m.n; ++v) {
    auto A = linalg::solve(bases[v - 1], MatQ(m.a[v] * bases[v]));
    auto B = linalg::solve(bases[v], MatQ(m.b[v] * bases[v - 1]));
    if (!A || !B) throw std::invalid_argument("restrict_to: not a subrepresentation");
    out.a[v] = *A;
    out.b[v] = *B;
  }
  check_rep(out);
  return out;
}

QuotientResult quotient_by(const Rep& m, const std::vector<MatQ>& bases) {
  QuotientResult out;
  out.rep.algebra = m.algebra;
  out.rep.n = m.n;
  out.rep.dims.resize(m.n);
  out.proj.resize(m.n);
  std::vector<MatQ> lift(m.n);
  for (int v = 0; v < m.n; ++v) {
    const int d = m.dims[v];
    const int k = static_cast<int>(bases[v].cols());
    SpanBuilder sb(d);
    for (int c = 0; c < k; ++c)
      if (!sb.add(bases[v].col(c)))
        throw std::invalid_argument("quotient_by: dependent basis");
    std::vector<int> comp;
    for (int i = 0; i < d && sb.dim() < d; ++i) {
      VecQ e = VecQ::Zero(d);
      e(i) = 1;
      if (sb.add(e)) comp.push_back(i);
    }
    MatQ C = MatQ::Zero(d, static_cast<int>(comp.size()));
    for (size_t c = 0; c < comp.size(); ++c) C(comp[c], static_cast<int>(c)) = 1;
    MatQ F = linalg::hstack(bases[v], C);
    auto Finv = linalg::solve(F, MatQ(MatQ::Identity(d, d)));
    if (!Finv) throw std::logic_error("quotient_by: frame not invertible");
    out.rep.dims[v] = d - k;
    out.proj[v] = Finv->block(k, 0, d - k, d);
    lift[v] = C;
  }
  out.rep.a.assign(m.n, MatQ(0, 0));
  out.rep.b.assign(m.n, MatQ(0, 0));
  for (int v = 1; v < m.n; ++v) {
    out.rep.a[v] = out.proj[v - 1] * m.a[v] * lift[v];
    out.rep.b[v] = out.proj[v] * m.b[v] * lift[v - 1];
  }
  check_rep(out.rep);
  return out;
}

QuotientResult quotient_pi(const Rep& m) {
  TraceResult tr = trace_eta(m);
  QuotientResult q = quotient_by(m, tr.inclusion);
  q.rep.algebra = Algebra::Pi;
  check_rep(q.rep);
  return q;
}

std::vector<MatQ> socle_inclusion(const Rep& m) {
  std::vector<MatQ> out(m.n);
  for (int v = 0; v < m.n; ++v) {
    MatQ S(0, m.dims[v]);
    if (v >= 1) S = linalg::vstack(S, m.a[v]);
    if (v + 1 < m.n) S = linalg::vstack(S, m.b[v + 1]);
    out[v] = linalg::nullspace(S);
  }
  return out;
}

std::vector<int> socle_parts(const Rep& m) {
  auto inc = socle_inclusion(m);
  std::vector<int> out(m.n);
  for (int v = 0; v < m.n; ++v) out[v] = static_cast<int>(inc[v].cols());
  return out;
}

std::vector<int> top_parts(const Rep& m) {
  std::vector<int> out(m.n);
  for (int v = 0; v < m.n; ++v) {
    MatQ In(m.dims[v], 0);
    if (v >= 1) In = linalg::hstack(In, m.b[v]);
    if (v + 1 < m.n) In = linalg::hstack(In, m.a[v + 1]);
    out[v] = m.dims[v] - linalg::rank(In);
  }
  return out;
}

SocleTower iterated_socle(const Rep& m, const std::vector<int>& seq) {
  const int n = m.n;
  std::vector<MatQ> U(n);
  for (int v = 0; v < n; ++v) U[v] = MatQ(m.dims[v], 0);
  for (int j : seq) {
    if (j < 0 || j >= n) throw std::invalid_argument("iterated_socle: bad vertex");
    MatQ S(0, m.dims[j]);
    if (j >= 1) {
      MatQ Q = linalg::left_nullspace(U[j - 1]);
      S = linalg::vstack(S, MatQ(Q * m.a[j]));
    }
    if (j + 1 < n) {
      MatQ Q = linalg::left_nullspace(U[j + 1]);
      S = linalg::vstack(S, MatQ(Q * m.b[j + 1]));
    }
    U[j] = linalg::nullspace(S);
  }
  SocleTower out;
  out.inclusion = U;
  out.rep = restrict_to(m, U);
  return out;
}

Rep sub_quotient(const Rep& m, const std::vector<MatQ>& outer,
                 const std::vector<MatQ>& inner) {
  Rep V = restrict_to(m, outer);
  std::vector<MatQ> W(m.n);
  for (int v = 0; v < m.n; ++v) {
    auto sol = linalg::solve(outer[v], inner[v]);
    if (!sol) throw std::invalid_argument("sub_quotient: inner not inside outer");
    W[v] = *sol;
  }
  return quotient_by(V, W).rep;
}

MatI end_radical_irr(const std::vector<Rep>& summands) {
  const int N = static_cast<int>(summands.size());
  MatI irr = MatI::Zero(N, N);
  if (N == 0) return irr;
  std::vector<std::vector<HomSpace>> H(N, std::vector<HomSpace>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) H[i][j] = hom_space(summands[i], summands[j]);

  // tau[j][gamma]: trace of left-composition by the gamma-th End basis element
  std::vector<std::vector<Rat>> tau(N);
  for (int j = 0; j < N; ++j) {
    tau[j].assign(H[j][j].dim, Rat(0));
    for (int g = 0; g < H[j][j].dim; ++g) {
      Rat t(0);
      for (int mm = 0; mm < N; ++mm)
        for (int be = 0; be < H[mm][j].dim; ++be) {
          RepMap comp = compose(H[j][j].basis[g], H[mm][j].basis[be]);
          const auto& pos = H[mm][j].coords[be];
          t += comp[pos[0]](pos[1], pos[2]);
        }
      tau[j][g] = t;
    }
  }

  auto trace_of = [&](int j, const RepMap& endo) {
    auto co = hom_coords(H[j][j], endo);
    Rat t(0);
    for (int g = 0; g < H[j][j].dim; ++g) t += co[g] * tau[j][g];
    return t;
  };

  std::vector<std::vector<std::vector<std::vector<Rat>>>> rad(
      N, std::vector<std::vector<std::vector<Rat>>>(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      MatQ P(H[i][j].dim, H[j][i].dim);
      for (int al = 0; al < H[i][j].dim; ++al)
        for (int be = 0; be < H[j][i].dim; ++be)
          P(al, be) = trace_of(j, compose(H[i][j].basis[al], H[j][i].basis[be]));
      MatQ K = linalg::nullspace(MatQ(P.transpose()));
      for (int c = 0; c < K.cols(); ++c) {
        std::vector<Rat> vec(H[i][j].dim);
        for (int r = 0; r < H[i][j].dim; ++r) vec[r] = K(r, c);
        rad[i][j].push_back(std::move(vec));
      }
    }

  for (int i = 0; i < N; ++i)
    if (static_cast<int>(rad[i][i].size()) != H[i][i].dim - 1)
      throw std::domain_error("end_radical_irr: endomorphism ring not local");

  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      SpanBuilder sq(H[i][j].dim);
      for (int l = 0; l < N; ++l)
        for (const auto& fc : rad[i][l])
          for (const auto& gc : rad[l][j]) {
            RepMap f = hom_lincomb(H[i][l], fc);
            RepMap g = hom_lincomb(H[l][j], gc);
            auto co = hom_coords(H[i][j], compose(g, f));
            VecQ vec(H[i][j].dim);
            for (int r = 0; r < H[i][j].dim; ++r) vec(r) = co[r];
            sq.add(vec);
          }
      irr(i, j) =
          static_cast<long long>(rad[i][j].size()) - sq.dim();
    }
  return irr;
}

Rep minimal_lift(const Rep& N, const std::vector<int>& J) {
  if (N.algebra != Algebra::Pi)
    throw std::invalid_argument("minimal_lift: input must be a truncated-algebra module");
  const int n = N.n;
  for (int j : J)
    if (j < 1 || j > n - 1) throw std::out_of_range("minimal_lift: J outside [1..n-1]");
  if (is_zero_rep(N)) return zero_rep(n, Algebra::D);

  auto soc = socle_parts(N);
  for (int v = 0; v < n; ++v)
    if (soc[v] > 0 && std::find(J.begin(), J.end(), v) == J.end())
      throw std::domain_error("minimal_lift: socle not supported on J");

  std::vector<Rep> Qparts, Pparts;
  std::vector<QuotientResult> quots;
  std::vector<int> levels;
  for (int j = 1; j <= n - 1; ++j) {
    if (std::find(J.begin(), J.end(), j) == J.end()) continue;
    for (int c = 0; c < soc[j]; ++c) levels.push_back(j);
  }
  for (int j : levels) {
    Rep P = build_proj(n, n - j);
    quots.push_back(quotient_pi(P));
    Pparts.push_back(std::move(P));
    Qparts.push_back(quots.back().rep);
  }
  Rep Q = direct_sum(Qparts);
  Rep P = direct_sum(Pparts);
  std::vector<MatQ> mu(n);
  for (int v = 0; v < n; ++v) {
    mu[v] = MatQ::Zero(Q.dims[v], P.dims[v]);
    int r = 0, c = 0;
    for (size_t s = 0; s < quots.size(); ++s) {
      const MatQ& blk = quots[s].proj[v];
      mu[v].block(r, c, blk.rows(), blk.cols()) = blk;
      r += static_cast<int>(blk.rows());
      c += static_cast<int>(blk.cols());
    }
  }

  HomSpace H = hom_space(N, Q);
  auto socN = socle_inclusion(N);
  RepMap iota;
  bool found = false;
  for (long t = 0; t <= 200 && !found; ++t) {
    std::vector<Rat> coef(H.dim);
    Rat p(1);
    for (int k = 0; k < H.dim; ++k) {
      coef[k] = p;
      p *= t;
    }
    RepMap f = hom_lincomb(H, coef);
    bool inj = true;
    for (int v = 0; v < n && inj; ++v) {
      MatQ img = f[v] * socN[v];
      if (linalg::rank(img) != img.cols()) inj = false;
    }
    if (inj) {
      iota = std::move(f);
      found = true;
    }
  }
  if (!found) throw std::logic_error("minimal_lift: no embedding found");

  Rep ND = as_algebra(N, Algebra::D);
  Rep NP = direct_sum({ND, P});
  std::vector<MatQ> K(n);
  for (int v = 0; v < n; ++v) {
    MatQ glue = MatQ::Zero(Q.dims[v], N.dims[v] + P.dims[v]);
    if (N.dims[v] > 0) glue.block(0, 0, Q.dims[v], N.dims[v]) = iota[v];
    if (P.dims[v] > 0) glue.block(0, N.dims[v], Q.dims[v], P.dims[v]) = -mu[v];
    K[v] = linalg::nullspace(glue);
  }
  Rep X = restrict_to(NP, K);
  X.algebra = Algebra::D;
  check_rep(X);

  auto tm = trace_eta(X).t_mult;
  std::vector<int> expect(n, 0);
  for (int j : levels) expect[j - 1] += 1;
  if (tm != expect) throw std::logic_error("minimal_lift: trace mismatch");
  return X;
}

std::vector<long long> delta_dims(const Rep& m) {
  std::vector<long long> d(m.n);
  for (int i = 1; i <= m.n; ++i)
    d[i - 1] = m.dims[i - 1] - (i < m.n ? m.dims[i] : 0);
  return d;
}

void to_json(nlohmann::json& j, const Rep& m) {
  auto mats = [&](const std::vector<MatQ>& arr) {
    nlohmann::json out = nlohmann::json::array();
    for (int v = 1; v < m.n; ++v) {
      nlohmann::json flat = nlohmann::json::array();
      for (int r = 0; r < arr[v].rows(); ++r)
        for (int c = 0; c < arr[v].cols(); ++c) flat.push_back(rat_str(arr[v](r, c)));
      out.push_back(std::move(flat));
    }
    return out;
  };
  j = nlohmann::json{{"algebra", m.algebra == Algebra::D ? "D" : "Pi"},
                     {"n", m.n},
                     {"dims", m.dims},
                     {"a", mats(m.a)},
                     {"b", mats(m.b)}};
}

void from_json(const nlohmann::json& j, Rep& m) {
  std::string alg = j.at("algebra").get<std::string>();
  if (alg == "D")
    m.algebra = Algebra::D;
  else if (alg == "Pi")
    m.algebra = Algebra::Pi;
  else
    throw std::invalid_argument("rep: unknown algebra tag");
  m.n = j.at("n").get<int>();
  m.dims = j.at("dims").get<std::vector<int>>();
  if (m.n < 1 || static_cast<int>(m.dims.size()) != m.n)
    throw std::invalid_argument("rep: bad dims");
  auto mats = [&](const nlohmann::json& arr, bool is_a) {
    std::vector<MatQ> out(m.n, MatQ(0, 0));
    if (static_cast<int>(arr.size()) != m.n - 1)
      throw std::invalid_argument("rep: arrow list size mismatch");
    for (int v = 1; v < m.n; ++v) {
      int rows = is_a ? m.dims[v - 1] : m.dims[v];
      int cols = is_a ? m.dims[v] : m.dims[v - 1];
      const auto& flat = arr[v - 1];
      if (static_cast<int>(flat.size()) != rows * cols)
        throw std::invalid_argument("rep: matrix size mismatch");
      MatQ M(rows, cols);
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          M(r, c) = rat_parse(flat[r * cols + c].get<std::string>());
      out[v] = std::move(M);
    }
    return out;
  };
  m.a = mats(j.at("a"), true);
  m.b = mats(j.at("b"), false);
  check_rep(m);
}

}  // namespace qflag
