#include "qflag/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qflag {

namespace {

void check_K(int n, const std::vector<int>& K) {
  for (size_t t = 0; t < K.size(); ++t) {
    if (K[t] < 1 || K[t] > n - 1)
      throw std::invalid_argument("K not inside [1..n-1]");
    if (t > 0 && K[t] <= K[t - 1])
      throw std::invalid_argument("K not strictly increasing");
  }
}

std::vector<std::pair<int, int>> maximal_blocks(const std::vector<int>& K) {
  std::vector<std::pair<int, int>> blocks;
  for (int v : K) {
    if (!blocks.empty() && blocks.back().second + 1 == v)
      blocks.back().second = v;
    else
      blocks.emplace_back(v, v);
  }
  return blocks;
}

std::vector<int> interval_word(int a, int b) {
  std::vector<int> w;
  const int step = a <= b ? 1 : -1;
  for (int x = a;; x += step) {
    w.push_back(x);
    if (x == b) break;
  }
  return w;
}

}  // namespace

std::vector<int> word_perm(const ReducedWord& w) {
  if (w.n < 1) throw std::invalid_argument("word_perm: n must be positive");
  std::vector<int> p(w.n);
  std::iota(p.begin(), p.end(), 1);
  // right-to-left product: appending sigma_j on the right swaps positions j, j+1
  for (int j : w.letters) {
    if (j < 1 || j >= w.n)
      throw std::invalid_argument("word_perm: letter out of range");
    std::swap(p[j - 1], p[j]);
  }
  return p;
}

int inversions(const std::vector<int>& oneline) {
  int c = 0;
  for (size_t i = 0; i < oneline.size(); ++i)
    for (size_t j = i + 1; j < oneline.size(); ++j)
      if (oneline[i] > oneline[j]) ++c;
  return c;
}

bool is_reduced(const ReducedWord& w) {
  return inversions(word_perm(w)) == static_cast<int>(w.letters.size());
}

std::vector<int> w0w0K_perm(int n, const std::vector<int>& K) {
  check_K(n, K);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  for (auto [c, d] : maximal_blocks(K))
    std::reverse(p.begin() + (c - 1), p.begin() + (d + 1));
  for (int& x : p) x = n + 1 - x;
  return p;
}

std::vector<std::vector<int>> interval_blocks(int n, const std::vector<int>& K) {
  if (n < 2) throw std::invalid_argument("interval_blocks: need n >= 2");
  check_K(n, K);
  const auto blocks = maximal_blocks(K);
  const int R = static_cast<int>(blocks.size());
  std::vector<std::vector<int>> out;
  // grow the top block (an empty one when K is empty) to the upper boundary
  const int cb = R ? blocks[R - 1].first : 1;
  const int db = R ? blocks[R - 1].second : 0;
  for (int j = 1; j <= n - 1 - db; ++j) out.push_back(interval_word(cb, db + j));
  for (int i = R; i >= 1; --i) {
    const int ci = blocks[i - 1].first;
    const int cm = i >= 2 ? blocks[i - 2].first : 1;
    const int dm = i >= 2 ? blocks[i - 2].second : -1;
    // free letters between block i-1 and block i, then block i-1 itself
    for (int j = 1; j <= ci - dm - 2; ++j)
      out.push_back(interval_word(n - 1, ci - j));
    for (int j = 1; j <= dm + 2 - cm; ++j)
      out.push_back(interval_word(n - j, dm + 2 - j));
  }
  return out;
}

ReducedWord word_w0_mod_K(int n, const std::vector<int>& K) {
  const auto blocks = interval_blocks(n, K);
  ReducedWord w;
  w.n = n;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    w.letters.insert(w.letters.end(), it->begin(), it->end());
  return w;
}

ReducedWord factor_step(int n, const std::vector<int>& K, int j) {
  check_K(n, K);
  if (j < 1 || j > n - 1)
    throw std::invalid_argument("factor_step: j out of range");
  if (std::binary_search(K.begin(), K.end(), j))
    throw std::invalid_argument("factor_step: j already in K");
  const auto blocks = maximal_blocks(K);
  const std::pair<int, int>* left = nullptr;
  const std::pair<int, int>* right = nullptr;
  for (const auto& b : blocks) {
    if (b.second == j - 1) left = &b;
    if (b.first == j + 1) right = &b;
  }
  ReducedWord w;
  w.n = n;
  if (left && right) {
    // j bridges two blocks: recurse on the letter window [n-d, n-a],
    // then reverse to invert the recursive element
    const int a = left->first, b = left->second, d = right->second;
    std::vector<int> sub;
    for (int x = 1; x <= d - a + 1; ++x)
      if (x != d - b) sub.push_back(x);
    w = word_w0_mod_K(d - a + 2, sub);
    w.n = n;
    for (int& x : w.letters) x += n - d - 1;
    std::reverse(w.letters.begin(), w.letters.end());
  } else if (left) {
    w.letters = interval_word(n - left->second - 1, n - left->first);
  } else if (right) {
    w.letters = interval_word(n - right->first + 1, n - right->second);
  } else {
    w.letters = {n - j};
  }
  return w;
}

BfzQuiver bfz_quiver(const ReducedWord& w) {
  if (!is_reduced(w)) throw std::invalid_argument("bfz_quiver: word not reduced");
  const int r = static_cast<int>(w.letters.size());
  const auto iof = [&](int k) { return w.letters[r - k]; };
  std::vector<int> kminus(r + 1, 0), kplus(r + 1, r + 1);
  for (int k = 1; k <= r; ++k) {
    for (int s = k - 1; s >= 1; --s)
      if (iof(s) == iof(k)) {
        kminus[k] = s;
        break;
      }
    for (int s = k + 1; s <= r; ++s)
      if (iof(s) == iof(k)) {
        kplus[k] = s;
        break;
      }
  }
  BfzQuiver q;
  q.r = r;
  q.letters = w.letters;
  q.frozen.resize(r);
  for (int k = 1; k <= r; ++k) q.frozen[k - 1] = kplus[k] > r;
  for (int k = 1; k <= r; ++k)
    if (kminus[k] > 0) q.arrows.emplace_back(k, kminus[k]);
  for (int s = 1; s <= r; ++s)
    for (int t = s + 1; t <= r; ++t)
      if (std::abs(iof(s) - iof(t)) == 1 && t < kplus[s] && kplus[s] <= kplus[t])
        q.arrows.emplace_back(s, t);
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

std::string bfz_dot(const BfzQuiver& q) {
  std::string s = "digraph bfz {\n  rankdir=LR;\n";
  for (int k = 1; k <= q.r; ++k) {
    s += "  " + std::to_string(k) + " [label=\"" + std::to_string(k) + ":" +
         std::to_string(q.letters[q.r - k]) + "\"";
    if (q.frozen[k - 1]) s += ", shape=box";
    s += "];\n";
  }
  for (auto [a, b] : q.arrows)
    s += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
  s += "}\n";
  return s;
}

std::vector<std::vector<long long>> beta_roots(const ReducedWord& w) {
  const int r = static_cast<int>(w.letters.size());
  const int m = w.n - 1;
  const auto iof = [&](int k) { return w.letters[r - k]; };
  std::vector<std::vector<long long>> out;
  out.reserve(r);
  for (int k = 1; k <= r; ++k) {
    std::vector<long long> v(m, 0);
    v[iof(k) - 1] = 1;
    for (int t = k - 1; t >= 1; --t) {
      const int i = iof(t);
      const long long nb = (i >= 2 ? v[i - 2] : 0) + (i < m ? v[i] : 0);
      v[i - 1] = nb - v[i - 1];
    }
    out.push_back(std::move(v));
  }
  return out;
}

Rep injective_R(int n, int j) {
  if (j < 1 || j > n - 1)
    throw std::invalid_argument("injective_R: vertex out of range");
  return quotient_pi(build_proj(n, n - j)).rep;
}

SocleTower weyl_V(const ReducedWord& w, int k) {
  const int r = static_cast<int>(w.letters.size());
  if (k < 1 || k > r) throw std::invalid_argument("weyl_V: position out of range");
  const std::vector<int> seq(w.letters.begin() + (r - k), w.letters.end());
  return iterated_socle(injective_R(w.n, w.letters[r - k]), seq);
}

std::vector<int> kminus_all(const ReducedWord& w) {
  const int r = static_cast<int>(w.letters.size());
  std::vector<int> km(r, 0);
  for (int k = 1; k <= r; ++k)
    for (int s = k - 1; s >= 1; --s)
      if (w.letters[r - s] == w.letters[r - k]) {
        km[k - 1] = s;
        break;
      }
  return km;
}

Rep module_M(const ReducedWord& w, int k) {
  const int r = static_cast<int>(w.letters.size());
  if (k < 1 || k > r) throw std::invalid_argument("module_M: position out of range");
  const auto km = kminus_all(w);
  const Rep R = injective_R(w.n, w.letters[r - k]);
  const SocleTower outer = weyl_V(w, k);
  std::vector<MatQ> inner(w.n);
  if (km[k - 1] > 0) {
    inner = weyl_V(w, km[k - 1]).inclusion;
  } else {
    for (int v = 0; v < w.n; ++v) inner[v] = MatQ(R.dims[v], 0);
  }
  return sub_quotient(R, outer.inclusion, inner);
}

std::vector<std::vector<long long>> module_M_dims(const ReducedWord& w) {
  const int r = static_cast<int>(w.letters.size());
  std::vector<std::vector<long long>> out;
  out.reserve(r);
  for (int k = 1; k <= r; ++k) {
    const Rep M = module_M(w, k);
    std::vector<long long> d(M.dims.begin(), M.dims.end());
    out.push_back(std::move(d));
  }
  return out;
}

bool check_simple_top(const ReducedWord& w) {
  const int r = static_cast<int>(w.letters.size());
  for (int k = 1; k <= r; ++k) {
    const auto tp = top_parts(module_M(w, k));
    long long tot = 0;
    for (int x : tp) tot += x;
    if (tot != 1) return false;
  }
  return true;
}

}  // namespace qflag
