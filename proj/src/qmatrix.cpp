#include "qflag/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qflag {

QPoly QPoly::one() { return q_power(0); }

QPoly QPoly::q_power(int e, const mpz_class& c) {
  QPoly p;
  if (c != 0) p.coef[e] = c;
  return p;
}

QPoly QPoly::shifted(int e) const {
  QPoly p;
  for (const auto& [d, c] : coef) p.coef[d + e] = c;
  return p;
}

QPoly QPoly::bar() const {
  QPoly p;
  for (const auto& [d, c] : coef) p.coef[-d] = c;
  return p;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r = a;
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

QPoly operator-(const QPoly& a) {
  QPoly r;
  for (const auto& [d, c] : a.coef) r.coef[d] = -c;
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [da, ca] : a.coef)
    for (const auto& [db, cb] : b.coef) {
      mpz_class& slot = r.coef[da + db];
      slot += ca * cb;
    }
  for (auto it = r.coef.begin(); it != r.coef.end();)
    it = it->second == 0 ? r.coef.erase(it) : std::next(it);
  return r;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.coef == b.coef; }
bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : p.coef) {
    if (!first) os << (c > 0 ? " + " : " - ");
    mpz_class ac = abs(c);
    if (first && c < 0) os << '-';
    first = false;
    if (ac != 1 || d == 0) os << ac.get_str();
    if (d != 0) {
      if (ac != 1) os << '*';
      os << 'q';
      if (d != 1) os << '^' << d;
    }
  }
  return os.str();
}

QMat QMat::one() {
  QMat m;
  m.terms[{}] = QPoly::one();
  return m;
}

QMat QMat::letter(int i, int j) {
  QMat m;
  m.terms[{{i, j}}] = QPoly::one();
  return m;
}

namespace {

void add_term(std::map<QWord, QPoly>& acc, const QWord& w, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc[w] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// rewrite an arbitrary word into normally ordered terms
void normalize_into(std::map<QWord, QPoly>& out, QWord w, QPoly c) {
  std::map<QWord, QPoly> pending;
  add_term(pending, std::move(w), std::move(c));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    QWord& cur = node.key();
    QPoly& coef = node.mapped();
    size_t p = 0;
    while (p + 1 < cur.size() && !(cur[p + 1] < cur[p])) ++p;
    if (p + 1 >= cur.size()) {
      add_term(out, cur, coef);
      continue;
    }
    auto [a, b] = cur[p];      // later letter in lex order
    auto [s, t] = cur[p + 1];  // earlier letter
    if (a == s || b == t) {
      // same row or column: straighten at the cost of 1/q
      std::swap(cur[p], cur[p + 1]);
      add_term(pending, cur, coef.shifted(-1));
    } else if (b < t) {
      // rows and columns both reversed: plain swap
      std::swap(cur[p], cur[p + 1]);
      add_term(pending, cur, coef);
    } else {
      // swap plus the correction term with the columns exchanged
      QWord other = cur;
      other[p] = {s, b};
      other[p + 1] = {a, t};
      std::swap(cur[p], cur[p + 1]);
      QPoly qdiff = QPoly::q_power(1) - QPoly::q_power(-1);
      add_term(pending, other, -(qdiff * coef));
      add_term(pending, cur, coef);
    }
  }
}

}  // namespace

QMat QMat::bar() const {
  QMat r;
  for (const auto& [w, c] : terms) {
    QWord rev(w.rbegin(), w.rend());
    normalize_into(r.terms, std::move(rev), c.bar());
  }
  return r;
}

QMat operator+(const QMat& a, const QMat& b) {
  QMat r = a;
  for (const auto& [w, c] : b.terms) add_term(r.terms, w, c);
  return r;
}

QMat operator-(const QMat& a) {
  QMat r;
  for (const auto& [w, c] : a.terms) r.terms[w] = -c;
  return r;
}

QMat operator-(const QMat& a, const QMat& b) { return a + (-b); }

QMat operator*(const QMat& a, const QMat& b) {
  QMat r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) {
      QWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      normalize_into(r.terms, std::move(w), ca * cb);
    }
  return r;
}

QMat operator*(const QPoly& c, const QMat& a) {
  QMat r;
  for (const auto& [w, t] : a.terms) add_term(r.terms, w, c * t);
  return r;
}

bool operator==(const QMat& a, const QMat& b) { return a.terms == b.terms; }
bool operator!=(const QMat& a, const QMat& b) { return !(a == b); }

std::string to_string(const QMat& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : m.terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(c) << ')';
    for (const auto& [i, j] : w) os << " x" << i << j;
  }
  return os.str();
}

QMat quantum_minor(int n, const KSet& I) {
  if (I.n != n) throw std::invalid_argument("quantum_minor: ambient mismatch");
  int r = static_cast<int>(I.size());
  QMat m;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    long long ell = 0;
    for (int p = 0; p < r; ++p)
      for (int s = p + 1; s < r; ++s)
        if (perm[p] > perm[s]) ++ell;
    QWord w(r);
    for (int p = 0; p < r; ++p) w[p] = {p + 1, I.elems[perm[p]]};
    mpz_class c = (ell % 2 == 0) ? 1 : -1;
    m.terms[w] = QPoly::q_power(static_cast<int>(ell), c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return m;
}

long long inv_count(const std::vector<int>& A, const std::vector<int>& B) {
  long long r = 0;
  for (int a : A)
    for (int b : B)
      if (a > b) ++r;
  return r;
}

std::optional<int> quasi_commutation_power(const QMat& a, const QMat& b) {
  QMat ab = a * b;
  QMat ba = b * a;
  if (ab.is_zero() && ba.is_zero()) return 0;
  if (ab.is_zero() || ba.is_zero()) return std::nullopt;
  const auto& [w0, c0] = *ab.terms.begin();
  auto it = ba.terms.find(w0);
  if (it == ba.terms.end()) return std::nullopt;
  // candidate shift from the first shared word
  if (c0.coef.size() != it->second.coef.size()) return std::nullopt;
  int m = c0.coef.begin()->first - it->second.coef.begin()->first;
  QMat diff = ab - QPoly::q_power(m) * ba;
  if (diff.is_zero()) return m;
  return std::nullopt;
}

bool verify_quasicomm(int n, const KSet& I, const KSet& J) {
  auto m = quasi_commutation_power(quantum_minor(n, I), quantum_minor(n, J));
  bool ws = weakly_separated(I, J);
  if (m.has_value() != ws) return false;
  if (ws && *m != c_exponent(I, J)) return false;
  return true;
}

bool verify_lzrel1(int n, const KSet& I, const KSet& J) {
  if (I.size() > J.size()) throw std::invalid_argument("lzrel1: needs |I| <= |J|");
  QMat lhs = quantum_minor(n, I) * quantum_minor(n, J);
  QMat rhs;
  auto diff = set_minus(J.elems, I.elems);
  int need = static_cast<int>(J.size() - I.size());
  int dsz = static_cast<int>(diff.size());
  // iterate over subsets L of J \ I with |L| = need
  std::vector<int> pick(need);
  auto rec = [&](auto&& self, int start, int got) -> void {
    if (got == need) {
      std::vector<int> L(pick.begin(), pick.end());
      auto IL = set_union(I.elems, L);
      auto JL = set_minus(J.elems, L);
      long long e = inv_count(I.elems, L) - inv_count(JL, L);
      mpz_class sgn = (e % 2 == 0) ? 1 : -1;
      QPoly coef = QPoly::q_power(static_cast<int>(e), sgn);
      rhs = rhs + coef * (quantum_minor(n, make_kset(n, IL)) *
                          quantum_minor(n, make_kset(n, JL)));
      return;
    }
    for (int p = start; p <= dsz - (need - got); ++p) {
      pick[got] = diff[p];
      self(self, p + 1, got + 1);
    }
  };
  rec(rec, 0, 0);
  return lhs == rhs;
}

bool verify_lzrel(int n, const KSet& I, const KSet& J) {
  if (I.size() < J.size() + 2) throw std::invalid_argument("lzrel: needs |I| >= |J|+2");
  QMat acc;
  for (int i : set_minus(I.elems, J.elems)) {
    auto Ii = set_minus(I.elems, {i});
    auto Ji = set_union(J.elems, {i});
    long long e = inv_count({i}, J.elems) - inv_count({i}, Ii);
    mpz_class sgn = (e % 2 == 0) ? 1 : -1;
    QPoly coef = QPoly::q_power(static_cast<int>(e), sgn);
    acc = acc + coef * (quantum_minor(n, make_kset(n, Ii)) *
                        quantum_minor(n, make_kset(n, Ji)));
  }
  return acc.is_zero();
}

bool verify_plucker(int n, const KSet& L, int a, int b, int c, int d) {
  if (!(a < b && b < c && c < d)) throw std::invalid_argument("plucker: need a<b<c<d");
  for (int x : {a, b, c, d})
    if (L.contains(x)) throw std::invalid_argument("plucker: corner inside the core");
  auto mk = [&](int u, int v) {
    return quantum_minor(n, make_kset(n, set_union(L.elems, {u, v})));
  };
  QMat lhs = mk(a, c) * mk(b, d);
  QMat rhs = QPoly::q_power(-1) * (mk(a, b) * mk(c, d)) +
             QPoly::q_power(1) * (mk(b, c) * mk(a, d));
  return lhs == rhs;
}

bool verify_incidence(int n, const KSet& L, int a, int b, int c) {
  if (!(a < b && b < c)) throw std::invalid_argument("incidence: need a<b<c");
  for (int x : {a, b, c})
    if (L.contains(x)) throw std::invalid_argument("incidence: corner inside the core");
  auto mk2 = [&](int u, int v) {
    return quantum_minor(n, make_kset(n, set_union(L.elems, {u, v})));
  };
  auto mk1 = [&](int u) {
    return quantum_minor(n, make_kset(n, set_union(L.elems, {u})));
  };
  QMat lhs = mk2(a, c) * mk1(b);
  QMat rhs = QPoly::q_power(-1) * (mk2(a, b) * mk1(c)) +
             QPoly::q_power(1) * (mk2(b, c) * mk1(a));
  return lhs == rhs;
}

bool verify_barprod(int n, const KSet& I, const KSet& J) {
  QMat ab = quantum_minor(n, I) * quantum_minor(n, J);
  QMat ba = quantum_minor(n, J) * quantum_minor(n, I);
  return ab.bar() == ba;
}

bool bar_twist_matches_ext(int n, const KSet& I, const KSet& J) {
  QMat ab = quantum_minor(n, I) * quantum_minor(n, J);
  QMat ba = quantum_minor(n, J) * quantum_minor(n, I);
  int d = static_cast<int>(d_exponent(I, J));
  bool twisted_equal = (QPoly::q_power(d) * ab - ba).is_zero();
  return twisted_equal == (dim_ext_D(I, J) == 0);
}

}  // namespace qflag
