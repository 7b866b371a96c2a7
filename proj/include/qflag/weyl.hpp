#pragma once

// Reduced words for the parabolic quotients w0·w0^K of the symmetric group:
// interval-word constructions, single-step factorizations, BFZ quivers, the
// root sequence beta_k, and the socle-filtration modules V_k, M_k over the
// truncated algebra that realize those roots as dimension vectors.

#include <string>
#include <utility>
#include <vector>

#include "qflag/dmod.hpp"

namespace qflag {

// Letters are stored in display order (i_r, ..., i_1): the rightmost letter
// acts first. Position k in [1..r] refers to i_k = letters[r-k].
struct ReducedWord {
  int n = 0;
  std::vector<int> letters;
};

// One-line form: perm[x-1] = w(x) for x in [1..n].
std::vector<int> word_perm(const ReducedWord& w);
int inversions(const std::vector<int>& oneline);
bool is_reduced(const ReducedWord& w);

// One-line form of w0·w0^K, where w0^K reverses the positions [c, d+1] of
// each maximal interval [c, d] of K and w0 reverses everything.
std::vector<int> w0w0K_perm(int n, const std::vector<int>& K);

// The interval words of the construction in acting order (first-acting block
// first); concatenating the reversed list gives word_w0_mod_K.
std::vector<std::vector<int>> interval_blocks(int n, const std::vector<int>& K);

ReducedWord word_w0_mod_K(int n, const std::vector<int>& K);

// A reduced word w with w0·w0^K = perm(w) · w0·w0^{K ∪ {j}}, lengths adding.
ReducedWord factor_step(int n, const std::vector<int>& K, int j);

struct BfzQuiver {
  int r = 0;
  std::vector<int> letters;                 // display order, as in ReducedWord
  std::vector<std::pair<int, int>> arrows;  // s -> t, vertices 1..r
  std::vector<bool> frozen;                 // frozen[k-1] ⟺ i_k has no later occurrence
};

// Throws if the word is not reduced.
BfzQuiver bfz_quiver(const ReducedWord& w);
std::string bfz_dot(const BfzQuiver& q);

// beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) in simple-root coordinates
// (entry v-1 is the alpha_v coefficient).
std::vector<std::vector<long long>> beta_roots(const ReducedWord& w);

// The injective module over the truncated algebra with socle S_j.
Rep injective_R(int n, int j);

// V_k: the socle tower of R_{i_k} along (i_k, ..., i_1), traced within
// R_{i_k}; k in [1..r].
SocleTower weyl_V(const ReducedWord& w, int k);

// kminus[k-1] = largest s < k with i_s = i_k, or 0.
std::vector<int> kminus_all(const ReducedWord& w);

// M_k = V_k / V_{k^-} as a module, and its per-vertex dimension vectors.
Rep module_M(const ReducedWord& w, int k);
std::vector<std::vector<long long>> module_M_dims(const ReducedWord& w);

// True iff every M_k has a one-dimensional top.
bool check_simple_top(const ReducedWord& w);

}  // namespace qflag
