#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "qflag/weyl.hpp"

using namespace qflag;

namespace {

std::vector<int> compose(const std::vector<int>& u, const std::vector<int>& v) {
  std::vector<int> r(v.size());
  for (size_t x = 0; x < v.size(); ++x) r[x] = u[v[x] - 1];
  return r;
}

std::vector<int> subset_of_mask(int mask, int m) {
  std::vector<int> K;
  for (int v = 1; v <= m; ++v)
    if (mask & (1 << (v - 1))) K.push_back(v);
  return K;
}

int parabolic_length(int n, const std::vector<int>& K) {
  int len = n * (n - 1) / 2;
  int run = 0;
  for (size_t t = 0; t < K.size(); ++t) {
    run = (t > 0 && K[t - 1] + 1 == K[t]) ? run + 1 : 1;
    len -= run;
  }
  return len;
}

std::vector<int> mutable_vertices(const BfzQuiver& q) {
  std::vector<int> out;
  for (int k = 1; k <= q.r; ++k)
    if (!q.frozen[k - 1]) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("parabolic words match the pinned fixtures") {
  CHECK(word_w0_mod_K(3, {}).letters == std::vector<int>{1, 2, 1});
  CHECK(word_w0_mod_K(4, {}).letters == std::vector<int>{1, 2, 3, 1, 2, 1});
  CHECK(word_w0_mod_K(4, {2}).letters == std::vector<int>{3, 2, 1, 2, 3});
  CHECK(word_w0_mod_K(7, {1, 5, 6}).letters ==
        std::vector<int>{5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 6, 5, 4, 3, 6, 5, 4});
  CHECK(word_w0_mod_K(7, {1, 3, 4}).letters ==
        std::vector<int>{5, 4, 3, 2, 1, 6, 5, 4, 3, 2, 3, 4, 5, 6, 3, 4, 5});
  CHECK(word_w0_mod_K(7, {1, 2, 4, 5, 6}).letters ==
        std::vector<int>{4, 3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3});
  CHECK(word_w0_mod_K(6, {1, 2, 3, 4, 5}).letters.empty());
  CHECK_THROWS_AS(word_w0_mod_K(4, {4}), std::invalid_argument);
  CHECK_THROWS_AS(word_w0_mod_K(4, {2, 2}), std::invalid_argument);
}

TEST_CASE("every parabolic word is reduced with the correct permutation") {
  for (int n = 2; n <= 6; ++n) {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      const auto K = subset_of_mask(mask, n - 1);
      const ReducedWord w = word_w0_mod_K(n, K);
      REQUIRE(static_cast<int>(w.letters.size()) == parabolic_length(n, K));
      REQUIRE(is_reduced(w));
      REQUIRE(word_perm(w) == w0w0K_perm(n, K));
    }
  }
}

TEST_CASE("interval blocks add one support letter at a time") {
  for (int n : {6, 7}) {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      const auto K = subset_of_mask(mask, n - 1);
      const auto blocks = interval_blocks(n, K);
      std::set<int> support;
      for (size_t i = 0; i < blocks.size(); ++i) {
        const auto& blk = blocks[i];
        REQUIRE(!blk.empty());
        const int endpoint = blk.back();
        if (i > 0) {
          REQUIRE(!support.count(endpoint));
          for (size_t t = 0; t + 1 < blk.size(); ++t)
            REQUIRE(support.count(blk[t]));
        }
        support.insert(blk.begin(), blk.end());
      }
    }
  }
}

TEST_CASE("factor steps split one letter off the parabolic quotient") {
  CHECK(factor_step(7, {2, 3}, 4).letters == std::vector<int>{3, 4, 5});
  CHECK(factor_step(7, {2, 4, 5, 6}, 1).letters == std::vector<int>{6, 5});
  CHECK(factor_step(7, {4, 6}, 2).letters == std::vector<int>{5});
  CHECK(factor_step(7, {2, 4, 6}, 5).letters == std::vector<int>{2, 3, 1, 2});
  CHECK_THROWS_AS(factor_step(7, {2, 4, 6}, 4), std::invalid_argument);

  for (int n : {5, 6}) {
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      const auto K = subset_of_mask(mask, n - 1);
      for (int j = 1; j <= n - 1; ++j) {
        if (std::binary_search(K.begin(), K.end(), j)) continue;
        auto Kj = K;
        Kj.insert(std::lower_bound(Kj.begin(), Kj.end(), j), j);
        const ReducedWord w = factor_step(n, K, j);
        REQUIRE(is_reduced(w));
        REQUIRE(static_cast<int>(w.letters.size()) ==
                parabolic_length(n, K) - parabolic_length(n, Kj));
        REQUIRE(compose(word_perm(w), w0w0K_perm(n, Kj)) == w0w0K_perm(n, K));
      }
    }
  }
}

TEST_CASE("factor chains concatenate to reduced words with prefix structure") {
  const int n = 6;
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    const auto Kp = subset_of_mask(mask, n - 1);
    ReducedWord chain;
    chain.n = n;
    std::vector<int> cur;
    for (int j : Kp) {
      const ReducedWord step = factor_step(n, cur, j);
      chain.letters.insert(chain.letters.end(), step.letters.begin(),
                           step.letters.end());
      cur.insert(std::lower_bound(cur.begin(), cur.end(), j), j);
    }
    const ReducedWord tail = word_w0_mod_K(n, Kp);
    chain.letters.insert(chain.letters.end(), tail.letters.begin(),
                         tail.letters.end());
    REQUIRE(is_reduced(chain));
    REQUIRE(word_perm(chain) == w0w0K_perm(n, {}));
  }
}

TEST_CASE("injective modules have the expected socle and top") {
  for (int n = 3; n <= 6; ++n) {
    for (int j = 1; j <= n - 1; ++j) {
      const Rep R = injective_R(n, j);
      CHECK(R.dims[0] == 0);
      auto soc = socle_parts(R);
      auto top = top_parts(R);
      for (int v = 0; v < n; ++v) {
        CHECK(soc[v] == (v == j ? 1 : 0));
        CHECK(top[v] == (v == n - j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("socle filtrations of the smallest longest word") {
  const ReducedWord w{3, {1, 2, 1}};
  const SocleTower V1 = weyl_V(w, 1);
  CHECK(V1.rep.dims == std::vector<int>{0, 1, 0});
  CHECK(is_isomorphic(weyl_V(w, 2).rep, injective_R(3, 2)));
  CHECK(is_isomorphic(weyl_V(w, 3).rep, injective_R(3, 1)));
  CHECK(kminus_all(w) == std::vector<int>{0, 0, 1});

  const auto beta = beta_roots(w);
  std::set<std::vector<long long>> roots(beta.begin(), beta.end());
  CHECK(roots == std::set<std::vector<long long>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("socle towers follow the reflection recurrence") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<int>> Ks = {{}};
    for (int j = 1; j <= n - 1; ++j) Ks.push_back({j});
    for (const auto& K : Ks) {
      const ReducedWord w = word_w0_mod_K(n, K);
      const auto beta = beta_roots(w);
      const auto mdims = module_M_dims(w);
      REQUIRE(beta.size() == mdims.size());
      for (size_t k = 0; k < beta.size(); ++k) {
        REQUIRE(mdims[k][0] == 0);
        for (int v = 1; v <= n - 1; ++v) REQUIRE(mdims[k][v] == beta[k][v - 1]);
      }
    }
  }
}

TEST_CASE("bfz quiver matches the nineteen vertex example") {
  const ReducedWord w{
      7, {5, 2, 3, 1, 2, 6, 5, 4, 3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3}};
  REQUIRE(is_reduced(w));
  const BfzQuiver q = bfz_quiver(w);
  REQUIRE(q.r == 19);

  std::vector<std::pair<int, int>> expected = {
      // repetition arrows k -> k^-
      {16, 9},
      {10, 5},
      {15, 10},
      {18, 15},
      {6, 1},
      {11, 6},
      {17, 11},
      {7, 2},
      {12, 7},
      {8, 3},
      {13, 8},
      {19, 13},
      {14, 4},
      // adjacency arrows
      {1, 2},
      {1, 5},
      {2, 3},
      {2, 6},
      {3, 4},
      {3, 7},
      {4, 13},
      {5, 6},
      {5, 9},
      {6, 7},
      {6, 10},
      {7, 8},
      {7, 11},
      {8, 12},
      {9, 15},
      {10, 11},
      {11, 12},
      {11, 15},
      {12, 17},
      {12, 19},
      {13, 14},
      {14, 19},
      {15, 16},
      {15, 17},
      {16, 18},
      {17, 18},
  };
  std::sort(expected.begin(), expected.end());
  CHECK(q.arrows == expected);

  CHECK(mutable_vertices(q) ==
        std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15});

  // the twelve right-most letters form a parabolic word of their own; its
  // mutable vertices must not touch anything outside that range
  const ReducedWord tail{7, {4, 3, 2, 1, 5, 4, 3, 2, 6, 5, 4, 3}};
  CHECK(tail.letters == word_w0_mod_K(7, {1, 2, 4, 5, 6}).letters);
  const BfzQuiver qt = bfz_quiver(tail);
  const auto inner = mutable_vertices(qt);
  CHECK(inner == std::vector<int>{1, 2, 3, 5, 6, 7});
  for (auto [s, t] : q.arrows) {
    const bool s_in = std::binary_search(inner.begin(), inner.end(), s);
    const bool t_in = std::binary_search(inner.begin(), inner.end(), t);
    if (s_in) CHECK(t <= 12);
    if (t_in) CHECK(s <= 12);
  }

  const std::string dot = bfz_dot(q);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("16 -> 9;") != std::string::npos);
}

TEST_CASE("bfz quiver edge cases") {
  const BfzQuiver q = bfz_quiver(ReducedWord{4, {2}});
  CHECK(q.r == 1);
  CHECK(q.arrows.empty());
  CHECK(q.frozen == std::vector<bool>{true});
  CHECK_THROWS_AS(bfz_quiver(ReducedWord{3, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(bfz_quiver(ReducedWord{3, {1, 2, 1, 2}}), std::invalid_argument);
}

TEST_CASE("constructed words have simple-topped filtration quotients") {
  for (int n = 2; n <= 5; ++n)
    for (int mask = 0; mask < (1 << (n - 1)); ++mask)
      REQUIRE(check_simple_top(word_w0_mod_K(n, subset_of_mask(mask, n - 1))));
  CHECK(check_simple_top(ReducedWord{5, {2}}));
}

TEST_CASE("a stray reduced word can fail the simple-top property") {
  const ReducedWord w{5, {3, 2, 1, 4, 3}};
  REQUIRE(is_reduced(w));
  CHECK_FALSE(check_simple_top(w));
  CHECK(top_parts(module_M(w, 4)) == std::vector<int>{0, 1, 0, 1, 0});
}
