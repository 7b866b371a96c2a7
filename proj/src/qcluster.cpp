#include "qflag/qcluster.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qflag {

QHalf QHalf::one() { return power(0); }

QHalf QHalf::power(int halves, long long c) {
  QHalf p;
  if (c != 0) p.coef[halves] = c;
  return p;
}

QHalf QHalf::shifted(int halves) const {
  QHalf p;
  for (const auto& [d, c] : coef) p.coef[d + halves] = c;
  return p;
}

QHalf operator+(const QHalf& a, const QHalf& b) {
  QHalf r = a;
  for (const auto& [d, c] : b.coef) {
    auto it = r.coef.find(d);
    if (it == r.coef.end()) {
      r.coef[d] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.coef.erase(it);
    }
  }
  return r;
}

QHalf operator-(const QHalf& a) {
  QHalf r;
  for (const auto& [d, c] : a.coef) r.coef[d] = -c;
  return r;
}

QHalf operator-(const QHalf& a, const QHalf& b) { return a + (-b); }

QHalf operator*(const QHalf& a, const QHalf& b) {
  QHalf r;
  for (const auto& [da, ca] : a.coef)
    for (const auto& [db, cb] : b.coef) r.coef[da + db] += ca * cb;
  for (auto it = r.coef.begin(); it != r.coef.end();)
    it = it->second == 0 ? r.coef.erase(it) : std::next(it);
  return r;
}

bool operator==(const QHalf& a, const QHalf& b) { return a.coef == b.coef; }
bool operator!=(const QHalf& a, const QHalf& b) { return !(a == b); }

QHalf qhalf_div(const QHalf& num, const QHalf& den) {
  if (den.is_zero()) throw std::domain_error("qhalf_div: zero divisor");
  if (num.is_zero()) return {};
  QHalf rem = num;
  QHalf quot;
  const auto lead = std::prev(den.coef.end());
  // lowest terms of a product never cancel, so an exact quotient stays above this
  const int dmin = num.coef.begin()->first - den.coef.begin()->first;
  while (!rem.is_zero()) {
    auto top = std::prev(rem.coef.end());
    int d = top->first - lead->first;
    if (d < dmin || top->second % lead->second != 0)
      throw std::domain_error("qhalf_div: not divisible");
    long long c = top->second / lead->second;
    quot.coef[d] = c;
    rem = rem - QHalf::power(d, c) * den;
  }
  return quot;
}

std::string to_string(const QHalf& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : p.coef) {
    if (!first) os << (c > 0 ? " + " : " - ");
    long long ac = c < 0 ? -c : c;
    if (first && c < 0) os << '-';
    first = false;
    if (ac != 1 || d == 0) os << ac;
    if (d != 0) {
      if (ac != 1) os << '*';
      os << 'q';
      if (d != 2) {
        os << '^';
        if (d % 2 == 0)
          os << d / 2;
        else
          os << '(' << d << "/2)";
      }
    }
  }
  return os.str();
}

QTorus QTorus::monomial(const std::vector<int>& g, const QHalf& c) {
  QTorus x;
  if (!c.is_zero()) x.terms[g] = c;
  return x;
}

namespace {

void add_term(std::map<std::vector<int>, QHalf>& acc, const std::vector<int>& g,
              const QHalf& c) {
  if (c.is_zero()) return;
  auto it = acc.find(g);
  if (it == acc.end()) {
    acc[g] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

long long form_at(const MatI& L, const std::vector<int>& g, const std::vector<int>& h) {
  long long s = 0;
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    for (size_t j = 0; j < h.size(); ++j)
      if (h[j] != 0) s += static_cast<long long>(g[i]) * h[j] * L(i, j);
  }
  return s;
}

}  // namespace

QTorus operator+(const QTorus& a, const QTorus& b) {
  QTorus r = a;
  for (const auto& [g, c] : b.terms) add_term(r.terms, g, c);
  return r;
}

QTorus operator-(const QTorus& a, const QTorus& b) {
  QTorus r = a;
  for (const auto& [g, c] : b.terms) add_term(r.terms, g, -c);
  return r;
}

QTorus operator*(const QHalf& c, const QTorus& a) {
  QTorus r;
  for (const auto& [g, t] : a.terms) add_term(r.terms, g, c * t);
  return r;
}

bool operator==(const QTorus& a, const QTorus& b) { return a.terms == b.terms; }
bool operator!=(const QTorus& a, const QTorus& b) { return !(a == b); }

std::string to_string(const QTorus& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ") z^(";
    for (size_t i = 0; i < g.size(); ++i) {
      if (i) os << ',';
      os << g[i];
    }
    os << ')';
  }
  return os.str();
}

QTorus torus_mul(const MatI& L, const QTorus& a, const QTorus& b) {
  QTorus r;
  for (const auto& [g, cg] : a.terms)
    for (const auto& [h, ch] : b.terms) {
      if (g.size() != h.size() || static_cast<int>(g.size()) != L.rows())
        throw std::invalid_argument("torus_mul: lattice mismatch");
      std::vector<int> sum(g.size());
      for (size_t i = 0; i < g.size(); ++i) sum[i] = g[i] + h[i];
      long long tw = form_at(L, g, h);
      add_term(r.terms, sum, (cg * ch).shifted(static_cast<int>(tw)));
    }
  return r;
}

QTorus torus_div_right(const MatI& L, const QTorus& num, const QTorus& den) {
  if (den.is_zero()) throw std::domain_error("torus division by zero");
  if (num.is_zero()) return {};
  const auto dl = std::prev(den.terms.end());  // lex-leading divisor term
  if (num.terms.begin()->first.size() != dl->first.size())
    throw std::invalid_argument("torus_div_right: lattice mismatch");
  // the exact quotient's lex-lowest point; going below it proves inexactness
  std::vector<int> gmin(dl->first.size());
  for (size_t i = 0; i < gmin.size(); ++i)
    gmin[i] = num.terms.begin()->first[i] - den.terms.begin()->first[i];
  QTorus rem = num;
  QTorus quot;
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 200000) throw std::domain_error("torus division does not terminate");
    const auto tl = std::prev(rem.terms.end());
    std::vector<int> g(tl->first.size());
    for (size_t i = 0; i < g.size(); ++i) g[i] = tl->first[i] - dl->first[i];
    if (g < gmin) throw std::domain_error("torus division not exact");
    long long tw = form_at(L, g, dl->first);
    QHalf c = qhalf_div(tl->second.shifted(static_cast<int>(-tw)), dl->second);
    QTorus piece = QTorus::monomial(g, c);
    quot.terms.emplace_hint(quot.terms.begin(), g, c);
    rem = rem - torus_mul(L, piece, den);
  }
  return quot;
}

QClusterState init_qcluster(const Seed& s) {
  QClusterState st;
  st.seed = s;
  st.L0 = s.L;
  int nn = static_cast<int>(s.labels.size());
  for (int i = 0; i < nn; ++i) {
    std::vector<int> e(nn, 0);
    e[i] = 1;
    st.ups.push_back(QTorus::monomial(e));
  }
  return st;
}

namespace {

int find_neg_slot(const std::vector<int>& a) {
  int neg = -1;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < -1) throw std::invalid_argument("normalized_monomial: exponent below -1");
    if (a[i] == -1) {
      if (neg >= 0) throw std::invalid_argument("normalized_monomial: two negative slots");
      neg = static_cast<int>(i);
    }
  }
  return neg;
}

// the qsum-normalized product with the inverted slot deferred: the caller
// divides by ups[neg] on the right, which the phase already accounts for
QTorus qsum_numerator(const QClusterState& st, const std::vector<int>& a, int neg) {
  int nn = static_cast<int>(st.ups.size());
  if (static_cast<int>(a.size()) != nn)
    throw std::invalid_argument("normalized_monomial: rank mismatch");
  long long phase = 0;
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < i; ++j) phase += static_cast<long long>(a[i]) * a[j] * st.seed.L(i, j);
  if (neg >= 0)
    for (int j = neg + 1; j < nn; ++j) phase -= 2LL * a[j] * st.seed.L(neg, j);

  QTorus prod = QTorus::monomial(std::vector<int>(nn, 0), QHalf::power(static_cast<int>(phase)));
  for (int i = 0; i < nn; ++i) {
    if (i == neg) continue;
    for (int rep = 0; rep < a[i]; ++rep) prod = torus_mul(st.L0, prod, st.ups[i]);
  }
  return prod;
}

}  // namespace

QTorus normalized_monomial(const QClusterState& st, const std::vector<int>& a) {
  int neg = find_neg_slot(a);
  QTorus prod = qsum_numerator(st, a, neg);
  if (neg < 0) return prod;
  return torus_div_right(st.L0, prod, st.ups[neg]);
}

QClusterState qcluster_mutate(const QClusterState& st, int k) {
  if (k < 0 || k >= st.seed.num_mutable)
    throw std::out_of_range("qcluster_mutate: not a mutable index");
  int nn = static_cast<int>(st.ups.size());
  std::vector<int> gp(nn, 0), gm(nn, 0);
  gp[k] = gm[k] = -1;
  for (int j = 0; j < nn; ++j) {
    if (j == k) continue;
    long long b = st.seed.B(j, k);
    if (b > 0) gp[j] = static_cast<int>(b);
    if (b < 0) gm[j] = static_cast<int>(-b);
  }
  // the two summands need not be Laurent individually; divide their sum once
  QTorus fresh = torus_div_right(st.L0, qsum_numerator(st, gp, k) + qsum_numerator(st, gm, k),
                                 st.ups[k]);
  QClusterState out = st;
  out.ups[k] = fresh;
  out.seed = mutate(st.seed, k);
  return out;
}

std::optional<EClass> torus_degree(const QTorus& x, const std::vector<EClass>& classes) {
  std::optional<EClass> deg;
  for (const auto& [g, c] : x.terms) {
    if (g.size() != classes.size())
      throw std::invalid_argument("torus_degree: class count mismatch");
    int n = static_cast<int>(classes.empty() ? 0 : classes[0].delta.size());
    EClass total{std::vector<long long>(n, 0), std::vector<long long>(n, 0)};
    for (size_t i = 0; i < g.size(); ++i) {
      for (int p = 0; p < n; ++p) {
        total.delta[p] += g[i] * classes[i].delta[p];
        total.eta[p] += g[i] * classes[i].eta[p];
      }
    }
    if (!deg) {
      deg = total;
    } else if (deg->delta != total.delta || deg->eta != total.eta) {
      return std::nullopt;
    }
  }
  return deg;
}

XiMap build_xi(const Seed& s) {
  int nn = static_cast<int>(s.labels.size());
  for (bool sym : s.symbolic)
    if (sym) throw std::invalid_argument("build_xi: symbolic label");
  std::vector<Rep> quot;
  std::vector<int> epos(nn, -1);
  int live = 0;
  for (int i = 0; i < nn; ++i) {
    Rep q = quotient_pi(build_rank_one(s.n, s.labels[i])).rep;
    if (!is_zero_rep(q)) {
      epos[i] = live++;
      quot.push_back(q);
    }
  }
  int nj = static_cast<int>(s.J.size());
  XiMap xi;
  xi.rank = live + nj;
  xi.Lp = MatI::Zero(xi.rank, xi.rank);
  for (int a = 0; a < live; ++a)
    for (int b = 0; b < live; ++b)
      if (a != b) xi.Lp(a, b) = dim_hom(quot[a], quot[b]) - dim_hom(quot[b], quot[a]);
  for (int i = 0; i < nn; ++i) {
    if (epos[i] < 0) continue;
    EClass ci = eclass_of(build_rank_one(s.n, s.labels[i]));
    for (int t = 0; t < nj; ++t) {
      long long v = form_Lad(ci, eclass_of(build_T(s.n, s.J[t])));
      xi.Lp(epos[i], live + t) = v;
      xi.Lp(live + t, epos[i]) = -v;
    }
  }
  for (int i = 0; i < nn; ++i) {
    std::vector<int> im(xi.rank, 0);
    if (epos[i] >= 0) im[epos[i]] = 1;
    int sz = static_cast<int>(s.labels[i].size());
    auto at = std::find(s.J.begin(), s.J.end(), sz);
    if (at == s.J.end()) throw std::logic_error("build_xi: label size not admissible");
    im[live + static_cast<int>(at - s.J.begin())] += 1;
    xi.image.push_back(im);
  }
  for (int a = 0; a < live; ++a) {
    EClass c = eclass_of(quot[a]);
    xi.target_classes.push_back(c);
  }
  for (int t = 0; t < nj; ++t)
    xi.target_classes.push_back(eclass_of(build_T(s.n, s.J[t])));
  return xi;
}

QTorus apply_xi(const XiMap& xi, const QTorus& x) {
  QTorus r;
  for (const auto& [g, c] : x.terms) {
    if (g.size() != xi.image.size())
      throw std::invalid_argument("apply_xi: rank mismatch");
    std::vector<int> h(xi.rank, 0);
    for (size_t i = 0; i < g.size(); ++i)
      for (int p = 0; p < xi.rank; ++p) h[p] += g[i] * xi.image[i][p];
    add_term(r.terms, h, c);
  }
  return r;
}

void to_json(nlohmann::json& j, const QTorus& x) {
  j = nlohmann::json::array();
  for (const auto& [g, c] : x.terms) {
    nlohmann::json coef = nlohmann::json::array();
    for (const auto& [d, v] : c.coef) coef.push_back({d, v});
    j.push_back(nlohmann::json{{"g", g}, {"c", coef}});
  }
}

void from_json(const nlohmann::json& j, QTorus& x) {
  x.terms.clear();
  for (const auto& term : j) {
    auto g = term.at("g").get<std::vector<int>>();
    QHalf c;
    for (const auto& pair : term.at("c"))
      c.coef[pair.at(0).get<int>()] = pair.at(1).get<long long>();
    add_term(x.terms, g, c);
  }
}

}  // namespace qflag
