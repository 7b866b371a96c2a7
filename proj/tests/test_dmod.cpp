#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qflag/dmod.hpp"
#include "qflag/linalg.hpp"

#include <numeric>

using namespace qflag;

static KSet K(int n, std::vector<int> e) { return make_kset(n, std::move(e)); }

namespace {

// Commuting squares for every basis element of Hom(M, N).
bool hom_basis_valid(const Rep& M, const Rep& N) {
  HomSpace H = hom_space(M, N);
  for (const auto& f : H.basis) {
    for (int v = 1; v < M.n; ++v) {
      if (!linalg::is_zero(MatQ(f[v - 1] * M.a[v] - N.a[v] * f[v]))) return false;
      if (!linalg::is_zero(MatQ(f[v] * M.b[v] - N.b[v] * f[v - 1]))) return false;
    }
  }
  // coordinates must invert the basis listing
  for (int k = 0; k < H.dim; ++k) {
    auto co = hom_coords(H, H.basis[k]);
    for (int l = 0; l < H.dim; ++l)
      if (co[l] != Rat(k == l ? 1 : 0)) return false;
  }
  return true;
}

Rep fixture_module_x_input() {
  // dims (0,1,1,1), top at vertex 2, socle at 1 and 3
  Rep N = zero_rep(4, Algebra::Pi);
  N.dims = {0, 1, 1, 1};
  N.a[1] = MatQ::Zero(0, 1);
  N.b[1] = MatQ::Zero(1, 0);
  N.a[2] = MatQ::Zero(1, 1);
  N.a[2](0, 0) = 1;
  N.b[2] = MatQ::Zero(1, 1);
  N.a[3] = MatQ::Zero(1, 1);
  N.b[3] = MatQ::Zero(1, 1);
  N.b[3](0, 0) = 1;
  check_rep(N);
  return N;
}

}  // namespace

TEST_CASE("staircase model dimensions") {
  Rep d0 = build_D0(4);
  CHECK(d0.dims == std::vector<int>{4, 3, 2, 1});
  CHECK(socle_parts(d0) == std::vector<int>{1, 0, 0, 0});
  Rep m = build_rank_one(4, K(4, {1, 3}));
  CHECK(m.dims == std::vector<int>{2, 1, 1, 0});
  Rep d1 = build_rank_one(3, K(3, {2, 3}));
  CHECK(d1.dims == std::vector<int>{2, 2, 1});
  for (int i = 0; i < 4; ++i) {
    Rep p = build_proj(4, i);
    for (int v = 0; v < 4; ++v) CHECK(p.dims[v] == 4 - std::max(v, i));
  }
}

TEST_CASE("hom dimensions match the subset formula") {
  for (int n = 3; n <= 5; ++n) {
    auto sets = all_nonempty_subsets(n);
    for (const auto& I : sets) {
      Rep MI = build_rank_one(n, I);
      for (const auto& J : sets) {
        Rep MJ = build_rank_one(n, J);
        CHECK(hom_space(MI, MJ).dim == dim_hom(I, J));
      }
    }
  }
}

TEST_CASE("hom solver produces genuine morphisms") {
  auto sets = all_nonempty_subsets(4);
  for (const auto& I : sets)
    for (const auto& J : sets)
      CHECK(hom_basis_valid(build_rank_one(4, I), build_rank_one(4, J)));
  Rep s = direct_sum({build_rank_one(4, K(4, {1, 3})), build_T(4, 2)});
  CHECK(hom_basis_valid(s, s));
  CHECK(hom_basis_valid(s, build_D0(4)));
}

TEST_CASE("trace of the generating vertex") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& I : all_nonempty_subsets(n)) {
      auto tr = trace_eta(build_rank_one(n, I));
      std::vector<int> expect(n, 0);
      expect[I.size() - 1] = 1;
      CHECK(tr.t_mult == expect);
      CHECK(is_isomorphic(tr.sub, build_T(n, I.size())));
    }
}

TEST_CASE("truncation of projectives") {
  // quotient by the trace kills exactly the staircase part
  for (int n = 3; n <= 5; ++n) {
    for (int j = 1; j < n; ++j) {
      Rep R = quotient_pi(build_proj(n, n - j)).rep;
      std::vector<int> soc(n, 0), top(n, 0);
      soc[j] = 1;
      top[n - j] = 1;
      CHECK(socle_parts(R) == soc);
      CHECK(top_parts(R) == top);
    }
    CHECK(is_zero_rep(quotient_pi(build_T(n, 2)).rep));
  }
}

TEST_CASE("direct sum isomorphism is order independent") {
  Rep a = build_rank_one(4, K(4, {1, 3}));
  Rep b = build_rank_one(4, K(4, {2, 4}));
  CHECK(is_isomorphic(direct_sum({a, b}), direct_sum({b, a})));
  CHECK_FALSE(is_isomorphic(build_rank_one(4, K(4, {1, 2})), a));
}

TEST_CASE("iterated socle on small injectives") {
  Rep R1 = quotient_pi(build_proj(3, 2)).rep;  // socle at 1, top at 2
  auto t1 = iterated_socle(R1, {1});
  CHECK(t1.rep.dims == std::vector<int>{0, 1, 0});
  auto t2 = iterated_socle(R1, {1, 2});
  CHECK(t2.rep.dims == std::vector<int>{0, 1, 1});
  auto t3 = iterated_socle(R1, {2, 1});
  CHECK(t3.rep.dims == std::vector<int>{0, 1, 0});
  auto t4 = iterated_socle(R1, {2});
  CHECK(t4.rep.dims == std::vector<int>{0, 0, 0});

  Rep R2 = quotient_pi(build_proj(3, 1)).rep;  // socle at 2, top at 1
  auto u = iterated_socle(R2, {2, 1});
  CHECK(u.rep.dims == std::vector<int>{0, 1, 1});
}

TEST_CASE("sub quotient") {
  Rep R1 = quotient_pi(build_proj(3, 2)).rep;
  auto outer = iterated_socle(R1, {1, 2});
  auto inner = iterated_socle(R1, {1});
  Rep q = sub_quotient(R1, outer.inclusion, inner.inclusion);
  CHECK(q.dims == std::vector<int>{0, 0, 1});
  auto top = top_parts(q);
  CHECK(std::accumulate(top.begin(), top.end(), 0) == 1);
}

TEST_CASE("endomorphism radical quiver of a rank-one list") {
  std::vector<Rep> T;
  for (auto e : std::vector<std::vector<int>>{
           {1, 3}, {1, 2}, {2, 3}, {3, 4}, {1, 4}})
    T.push_back(build_rank_one(4, K(4, std::move(e))));
  MatI irr = end_radical_irr(T);
  long long total = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(irr(i, j) >= 0);
      total += irr(i, j);
    }
  CHECK(total == 8);
  // exchange column of the interior label {1,3}
  std::vector<long long> col = {irr(1, 0) - irr(0, 1), irr(2, 0) - irr(0, 2),
                                irr(3, 0) - irr(0, 3), irr(4, 0) - irr(0, 4)};
  CHECK(col == std::vector<long long>{1, -1, 1, -1});
}

TEST_CASE("endomorphism radical requires local summands") {
  std::vector<Rep> bad = {direct_sum({build_rank_one(4, K(4, {1, 2})),
                                      build_rank_one(4, K(4, {1, 3}))})};
  CHECK_THROWS_AS(end_radical_irr(bad), std::domain_error);
}

TEST_CASE("minimal lift of the fixture module") {
  Rep N = fixture_module_x_input();
  Rep X = minimal_lift(N, {1, 3});
  CHECK(X.dims == std::vector<int>{4, 3, 2, 1});
  CHECK(delta_dims(X) == std::vector<long long>{1, 1, 1, 1});
  auto tr = trace_eta(X);
  CHECK(tr.t_mult == std::vector<int>{1, 0, 1, 0});
  CHECK(hom_space(X, X).dim == 5);
  CHECK(is_isomorphic(quotient_pi(X).rep, N));
}

TEST_CASE("minimal lift of truncated projectives recovers them") {
  for (int n = 3; n <= 5; ++n)
    for (int j = 1; j < n; ++j) {
      Rep R = quotient_pi(build_proj(n, n - j)).rep;
      Rep lift = minimal_lift(R, {j});
      CHECK(is_isomorphic(lift, build_proj(n, n - j)));
    }
}

TEST_CASE("minimal lift edge cases") {
  CHECK(is_zero_rep(minimal_lift(zero_rep(4, Algebra::Pi), {1})));
  Rep R2 = quotient_pi(build_proj(4, 2)).rep;  // socle at 2
  CHECK_THROWS_AS(minimal_lift(R2, {1, 3}), std::domain_error);
  CHECK_THROWS_AS(minimal_lift(as_algebra(zero_rep(4, Algebra::D), Algebra::D),
                               std::vector<int>{1}),
                  std::invalid_argument);
}

TEST_CASE("rep json round trip") {
  Rep m = build_rank_one(4, K(4, {1, 3}));
  nlohmann::json j = m;
  Rep back = j.get<Rep>();
  CHECK(back.dims == m.dims);
  for (int v = 1; v < 4; ++v) {
    CHECK(linalg::is_zero(MatQ(back.a[v] - m.a[v])));
    CHECK(linalg::is_zero(MatQ(back.b[v] - m.b[v])));
  }
  nlohmann::json bad = j;
  bad["algebra"] = "Z";
  CHECK_THROWS_AS(bad.get<Rep>(), std::invalid_argument);
}
