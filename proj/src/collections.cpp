#include "qflag/collections.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qflag {

namespace {

KSet adjoin(const KSet& L, std::initializer_list<int> extra) {
  std::vector<int> e = L.elems;
  for (int x : extra) e.push_back(x);
  return make_kset(L.n, e);
}

std::string key_of(const WSCollection& c) {
  std::vector<std::vector<int>> rows;
  rows.reserve(c.sets.size());
  for (const auto& s : c.sets) rows.push_back(s.elems);
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  for (const auto& r : rows) {
    for (int x : r) os << x << ',';
    os << '|';
  }
  return os.str();
}

int replace_set(WSCollection& c, const KSet& leaving, const KSet& entering) {
  for (size_t i = 0; i < c.sets.size(); ++i)
    if (c.sets[i] == leaving) {
      c.sets[i] = entering;
      return static_cast<int>(i);
    }
  throw std::domain_error("collection does not contain the leaving set");
}

KSet interval_set(int n, int lo, int hi) {
  std::vector<int> e;
  for (int x = lo; x <= hi; ++x) e.push_back(x);
  return make_kset(n, e);
}

KSet two_interval_set(int n, int a1, int b1, int a2, int b2) {
  std::vector<int> e;
  for (int x = a1; x <= b1; ++x) e.push_back(x);
  for (int x = a2; x <= b2; ++x) e.push_back(x);
  return make_kset(n, e);
}

void check_sizes(int n, const std::vector<int>& J) {
  if (J.empty()) throw std::invalid_argument("sizes: empty");
  for (size_t i = 0; i < J.size(); ++i) {
    if (J[i] < 1 || J[i] > n - 1)
      throw std::invalid_argument("sizes: entry outside [1, n-1]");
    if (i > 0 && J[i] <= J[i - 1])
      throw std::invalid_argument("sizes: not strictly increasing");
  }
}

}  // namespace

void check_collection(const WSCollection& c) {
  if (c.n < 1) throw std::invalid_argument("collection: bad ambient size");
  for (size_t i = 0; i < c.J.size(); ++i) {
    if (c.J[i] < 1 || c.J[i] > c.n - 1)
      throw std::invalid_argument("collection: size outside [1, n-1]");
    if (i > 0 && c.J[i] <= c.J[i - 1])
      throw std::invalid_argument("collection: sizes not strictly increasing");
  }
  for (const auto& s : c.sets) {
    if (s.n != c.n) throw std::invalid_argument("collection: ambient mismatch");
    if (!std::binary_search(c.J.begin(), c.J.end(), static_cast<int>(s.size())))
      throw std::invalid_argument("collection: member size not admissible");
  }
  for (size_t i = 0; i < c.sets.size(); ++i)
    for (size_t j = i + 1; j < c.sets.size(); ++j) {
      if (c.sets[i] == c.sets[j])
        throw std::invalid_argument("collection: duplicate member");
      if (!weakly_separated(c.sets[i], c.sets[j]))
        throw std::domain_error("collection: members not weakly separated");
    }
}

bool contains_set(const WSCollection& c, const KSet& s) {
  return std::find(c.sets.begin(), c.sets.end(), s) != c.sets.end();
}

bool is_maximal(const WSCollection& c) {
  for (int t : c.J) {
    for (const auto& cand : all_subsets_of_size(c.n, t)) {
      if (contains_set(c, cand)) continue;
      bool compatible = true;
      for (const auto& s : c.sets)
        if (!weakly_separated(cand, s)) {
          compatible = false;
          break;
        }
      if (compatible) return false;
    }
  }
  return true;
}

WSCollection rectangle(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("rectangle: k outside [1, n-1]");
  WSCollection c;
  c.n = n;
  c.J = {k};
  c.sets.push_back(interval_set(n, 1, k));
  for (int i = k; i >= 1; --i)
    for (int j = 1; j <= n - k; ++j)
      c.sets.push_back(two_interval_set(n, 1, k - i, k - i + j + 1, k + j));
  check_collection(c);
  return c;
}

WSCollection extended_rectangle(int n, const std::vector<int>& J, int k) {
  check_sizes(n, J);
  if (!std::binary_search(J.begin(), J.end(), k))
    throw std::invalid_argument("extended_rectangle: k not among the sizes");
  WSCollection c = rectangle(n, k);
  c.J = J;
  for (int t : J) {
    if (t <= k) continue;
    for (int i = 1; i + t - 1 <= n; ++i) c.sets.push_back(interval_set(n, i, i + t - 1));
  }
  for (int t : J) {
    if (t >= k) continue;
    for (int a = t; a >= 0; --a)
      c.sets.push_back(two_interval_set(n, 1, a, n - t + a + 1, n));
  }
  check_collection(c);
  return c;
}

WSCollection geometric_exchange(const WSCollection& c, const Exchange& e) {
  if (e.L.n != c.n) throw std::invalid_argument("exchange: ambient mismatch");
  std::vector<int> q = {e.a, e.b, e.c, e.d};
  std::vector<int> srt = q;
  std::sort(srt.begin(), srt.end());
  for (int x : srt)
    if (x < 1 || x > c.n || e.L.contains(x))
      throw std::invalid_argument("exchange: corner not outside the core");
  if (std::adjacent_find(srt.begin(), srt.end()) != srt.end())
    throw std::invalid_argument("exchange: corners not distinct");
  bool diag_odd = (std::min(e.a, e.c) == srt[0] && std::max(e.a, e.c) == srt[2]);
  bool diag_even = (std::min(e.a, e.c) == srt[1] && std::max(e.a, e.c) == srt[3]);
  if (!diag_odd && !diag_even)
    throw std::invalid_argument("exchange: corners do not interleave");
  KSet leaving = adjoin(e.L, {e.a, e.c});
  KSet entering = adjoin(e.L, {e.b, e.d});
  const KSet wit[4] = {adjoin(e.L, {srt[0], srt[1]}), adjoin(e.L, {srt[1], srt[2]}),
                       adjoin(e.L, {srt[2], srt[3]}), adjoin(e.L, {srt[0], srt[3]})};
  for (const auto& w : wit)
    if (!contains_set(c, w)) throw std::domain_error("exchange: missing witness");
  if (contains_set(c, entering))
    throw std::domain_error("exchange: target already present");
  WSCollection out = c;
  replace_set(out, leaving, entering);
  check_collection(out);
  return out;
}

WSCollection flip(const WSCollection& c, const Flip& f) {
  if (f.L.n != c.n) throw std::invalid_argument("flip: ambient mismatch");
  if (!(1 <= f.i && f.i < f.j && f.j < f.k && f.k <= c.n))
    throw std::invalid_argument("flip: need 1 <= i < j < k <= n");
  for (int x : {f.i, f.j, f.k})
    if (f.L.contains(x)) throw std::invalid_argument("flip: corner inside the core");
  KSet low = adjoin(f.L, {f.j});
  KSet high = adjoin(f.L, {f.i, f.k});
  const KSet wit[4] = {adjoin(f.L, {f.i}), adjoin(f.L, {f.k}), adjoin(f.L, {f.i, f.j}),
                       adjoin(f.L, {f.j, f.k})};
  for (const auto& w : wit)
    if (!contains_set(c, w)) throw std::domain_error("flip: missing witness");
  const KSet& leaving = f.dir == FlipDir::Raise ? low : high;
  const KSet& entering = f.dir == FlipDir::Raise ? high : low;
  if (contains_set(c, entering)) throw std::domain_error("flip: target already present");
  WSCollection out = c;
  replace_set(out, leaving, entering);
  check_collection(out);
  return out;
}

std::vector<Flip> flip_schedule(int n, const std::vector<int>& J, int k) {
  check_sizes(n, J);
  if (!std::binary_search(J.begin(), J.end(), k) ||
      !std::binary_search(J.begin(), J.end(), k - 1))
    throw std::invalid_argument("flip_schedule: needs both k and k-1 admissible");
  std::vector<Flip> steps;
  for (int r = 1; r <= k - 1; ++r) {
    for (int s = n - k; s >= 1; --s) {
      Flip f;
      std::vector<int> core;
      for (int x = 1; x <= k - r - 1; ++x) core.push_back(x);
      for (int x = k - r + s + 1; x <= k + s - 1; ++x) core.push_back(x);
      f.L = make_kset(n, core);
      f.i = k - r;
      f.j = k - r + s;
      f.k = k + s;
      f.dir = FlipDir::Lower;
      steps.push_back(f);
    }
  }
  return steps;
}

WSCollection apply_flips(WSCollection c, const std::vector<Flip>& steps) {
  for (const auto& f : steps) c = flip(c, f);
  return c;
}

std::vector<Move> enumerate_moves(const WSCollection& c) {
  std::vector<Move> out;
  auto in_c = [&](const KSet& s) { return contains_set(c, s); };
  for (const auto& s : c.sets) {
    int t = static_cast<int>(s.size());
    std::vector<int> comp;
    for (int x = 1; x <= c.n; ++x)
      if (!s.contains(x)) comp.push_back(x);
    // exchanges: pick the leaving diagonal inside s, the entering one outside
    for (int p = 0; p < t; ++p)
      for (int q = p + 1; q < t; ++q) {
        int x = s.elems[p], y = s.elems[q];
        KSet L = make_kset(c.n, set_minus(s.elems, {x, y}));
        for (size_t u = 0; u < comp.size(); ++u)
          for (size_t v = u + 1; v < comp.size(); ++v) {
            std::vector<int> srt = {x, y, comp[u], comp[v]};
            std::sort(srt.begin(), srt.end());
            bool odd = (x == srt[0] && y == srt[2]);
            bool even = (x == srt[1] && y == srt[3]);
            if (!odd && !even) continue;
            Move m;
            m.is_flip = false;
            m.ex.L = L;
            if (odd) {
              m.ex.a = srt[0];
              m.ex.b = srt[1];
              m.ex.c = srt[2];
              m.ex.d = srt[3];
            } else {
              m.ex.a = srt[1];
              m.ex.b = srt[2];
              m.ex.c = srt[3];
              m.ex.d = srt[0];
            }
            bool ok = in_c(adjoin(L, {srt[0], srt[1]})) && in_c(adjoin(L, {srt[1], srt[2]})) &&
                      in_c(adjoin(L, {srt[2], srt[3]})) && in_c(adjoin(L, {srt[0], srt[3]})) &&
                      !in_c(adjoin(L, {m.ex.b, m.ex.d}));
            if (ok) out.push_back(m);
          }
      }
    // raising flips out of s
    for (int p = 0; p < t; ++p) {
      int j = s.elems[p];
      KSet L = make_kset(c.n, set_minus(s.elems, {j}));
      for (size_t u = 0; u < comp.size(); ++u)
        for (size_t v = u + 1; v < comp.size(); ++v) {
          int i = comp[u], k = comp[v];
          if (!(i < j && j < k)) continue;
          if (in_c(adjoin(L, {i, k}))) continue;
          if (in_c(adjoin(L, {i})) && in_c(adjoin(L, {k})) && in_c(adjoin(L, {i, j})) &&
              in_c(adjoin(L, {j, k}))) {
            Move m;
            m.is_flip = true;
            m.fl = Flip{L, i, j, k, FlipDir::Raise};
            out.push_back(m);
          }
        }
    }
    // lowering flips out of s
    for (int p = 0; p < t; ++p)
      for (int q = p + 1; q < t; ++q) {
        int i = s.elems[p], k = s.elems[q];
        KSet L = make_kset(c.n, set_minus(s.elems, {i, k}));
        for (int j = i + 1; j < k; ++j) {
          if (s.contains(j) || in_c(adjoin(L, {j}))) continue;
          if (in_c(adjoin(L, {i})) && in_c(adjoin(L, {k})) && in_c(adjoin(L, {i, j})) &&
              in_c(adjoin(L, {j, k}))) {
            Move m;
            m.is_flip = true;
            m.fl = Flip{L, i, j, k, FlipDir::Lower};
            out.push_back(m);
          }
        }
      }
  }
  return out;
}

WSCollection apply_move(const WSCollection& c, const Move& m) {
  return m.is_flip ? flip(c, m.fl) : geometric_exchange(c, m.ex);
}

std::string describe_move(const Move& m) {
  std::ostringstream os;
  if (m.is_flip) {
    os << (m.fl.dir == FlipDir::Raise ? "flip-raise" : "flip-lower") << " L={"
       << format_set(m.fl.L) << "} (" << m.fl.i << ',' << m.fl.j << ',' << m.fl.k << ')';
  } else {
    os << "exchange L={" << format_set(m.ex.L) << "} (" << m.ex.a << ',' << m.ex.b << ','
       << m.ex.c << ',' << m.ex.d << ')';
  }
  return os.str();
}

std::optional<std::vector<Move>> reach(const WSCollection& from, const KSet& target,
                                       int max_depth) {
  if (target.n != from.n) throw std::invalid_argument("reach: ambient mismatch");
  check_collection(from);
  struct Node {
    WSCollection c;
    std::vector<Move> path;
  };
  std::set<std::string> seen;
  std::queue<Node> bfs;
  bfs.push({from, {}});
  seen.insert(key_of(from));
  while (!bfs.empty()) {
    Node cur = std::move(bfs.front());
    bfs.pop();
    if (contains_set(cur.c, target)) return cur.path;
    if (static_cast<int>(cur.path.size()) >= max_depth) continue;
    for (const auto& m : enumerate_moves(cur.c)) {
      WSCollection nxt;
      try {
        nxt = apply_move(cur.c, m);
      } catch (const std::domain_error&) {
        continue;
      }
      std::string k = key_of(nxt);
      if (seen.count(k)) continue;
      seen.insert(k);
      auto path = cur.path;
      path.push_back(m);
      bfs.push({std::move(nxt), std::move(path)});
    }
  }
  return std::nullopt;
}

void to_json(nlohmann::json& j, const WSCollection& c) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& s : c.sets) sets.push_back(s.elems);
  j = nlohmann::json{{"n", c.n}, {"J", c.J}, {"sets", sets}};
}

void from_json(const nlohmann::json& j, WSCollection& c) {
  c.n = j.at("n").get<int>();
  c.J = j.at("J").get<std::vector<int>>();
  c.sets.clear();
  for (const auto& row : j.at("sets"))
    c.sets.push_back(make_kset(c.n, row.get<std::vector<int>>()));
  check_collection(c);
}

}  // namespace qflag
