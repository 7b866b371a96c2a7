#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qflag/qcluster.hpp"

using namespace qflag;

namespace {

MatI small_form() {
  MatI L = MatI::Zero(3, 3);
  L(0, 1) = 1;
  L(1, 0) = -1;
  L(1, 2) = 2;
  L(2, 1) = -2;
  L(0, 2) = -1;
  L(2, 0) = 1;
  return L;
}

QTorus random_elem(std::mt19937& rng, int rank, int nterms) {
  std::uniform_int_distribution<int> de(-2, 2), dc(1, 3), dh(-2, 2);
  QTorus x;
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> g(rank);
    for (int& v : g) v = de(rng);
    x = x + QTorus::monomial(g, QHalf::power(dh(rng), dc(rng)));
  }
  return x;
}

int label_index(const Seed& s, std::vector<int> elems) {
  for (size_t i = 0; i < s.labels.size(); ++i)
    if (s.labels[i].elems == elems) return static_cast<int>(i);
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("half exponent coefficients") {
  QHalf a = QHalf::power(1);  // q^{1/2}
  QHalf b = QHalf::power(-2);
  CHECK(to_string(a) == "q^(1/2)");
  CHECK(to_string(b) == "q^-1");
  CHECK(to_string(QHalf::power(2)) == "q");
  QHalf s = a * a * b;
  CHECK(s == QHalf::one());
  QHalf p = (a + b) * (a - b);
  CHECK(p == QHalf::power(2) - QHalf::power(-4));
  CHECK(qhalf_div(p, a + b) == a - b);
  CHECK(qhalf_div(p, a - b) == a + b);
  CHECK_THROWS_AS(qhalf_div(QHalf::power(0, 3), QHalf::power(0, 2)), std::domain_error);
}

TEST_CASE("torus multiplication law") {
  MatI L = small_form();
  std::vector<int> e1 = {1, 0, 0}, e2 = {0, 1, 0};
  QTorus z1 = QTorus::monomial(e1), z2 = QTorus::monomial(e2);
  // L(e1,e2)=1: product picks up a half twist
  QTorus p = torus_mul(L, z1, z2);
  CHECK(p == QTorus::monomial({1, 1, 0}, QHalf::power(1)));
  // inverse monomial cancels without twist
  QTorus zi = QTorus::monomial({-1, 0, 0});
  CHECK(torus_mul(L, z1, zi) == QTorus::monomial({0, 0, 0}));
  // commutation: z^g z^h = q^{L(g,h)} z^h z^g
  QTorus lhs = torus_mul(L, z1, z2);
  QTorus rhs = QHalf::power(2) * torus_mul(L, z2, z1);
  CHECK(lhs == rhs);
}

TEST_CASE("torus arithmetic is associative") {
  MatI L = small_form();
  std::mt19937 rng(4242);
  for (int t = 0; t < 30; ++t) {
    QTorus a = random_elem(rng, 3, 2);
    QTorus b = random_elem(rng, 3, 2);
    QTorus c = random_elem(rng, 3, 2);
    CHECK(torus_mul(L, torus_mul(L, a, b), c) == torus_mul(L, a, torus_mul(L, b, c)));
  }
}

TEST_CASE("right division inverts multiplication") {
  MatI L = small_form();
  std::mt19937 rng(777);
  for (int t = 0; t < 30; ++t) {
    QTorus x = random_elem(rng, 3, 3);
    QTorus d = random_elem(rng, 3, 2);
    if (d.is_zero()) continue;
    QTorus p = torus_mul(L, x, d);
    CHECK(torus_div_right(L, p, d) == x);
  }
  QTorus bad = QTorus::monomial({1, 0, 0}) + QTorus::monomial({0, 1, 0});
  QTorus one = QTorus::monomial({0, 0, 0});
  CHECK_THROWS_AS(torus_div_right(L, one, bad), std::domain_error);
}

TEST_CASE("qsum normalization reproduces plain monomials") {
  Seed s = seed_from_collection(rectangle(4, 2));
  QClusterState st = init_qcluster(s);
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> da(0, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> a(5);
    for (int& v : a) v = da(rng);
    CHECK(normalized_monomial(st, a) == QTorus::monomial(a));
  }
  // single inverted slot also lands on the plain monomial
  std::vector<int> a = {-1, 1, 0, 2, 0};
  CHECK(normalized_monomial(st, a) == QTorus::monomial(a));
}

TEST_CASE("one mutation satisfies the exchange identity") {
  Seed s = seed_from_collection(rectangle(4, 2));
  QClusterState st = init_qcluster(s);
  QClusterState mu = qcluster_mutate(st, 0);

  int i13 = label_index(s, {1, 3}), i12 = label_index(s, {1, 2});
  int i23 = label_index(s, {2, 3}), i34 = label_index(s, {3, 4});
  int i14 = label_index(s, {1, 4});
  CHECK(mu.seed.labels[0].elems == std::vector<int>{2, 4});

  const QTorus& old13 = st.ups[i13];
  const QTorus& fresh24 = mu.ups[0];
  CHECK(fresh24.terms.size() == 2);

  QTorus lhs = torus_mul(st.L0, old13, fresh24);
  QTorus rhs = QHalf::power(-2) * torus_mul(st.L0, st.ups[i12], st.ups[i34]) +
               QHalf::power(2) * torus_mul(st.L0, st.ups[i23], st.ups[i14]);
  CHECK(lhs == rhs);

  // the new variable quasi-commutes with a frozen one by the c exponent
  QTorus p = torus_mul(st.L0, fresh24, st.ups[i12]);
  QTorus q = torus_mul(st.L0, st.ups[i12], fresh24);
  long long c = c_exponent(make_kset(4, {2, 4}), make_kset(4, {1, 2}));
  CHECK(p == QHalf::power(static_cast<int>(2 * c)) * q);
}

TEST_CASE("mutating twice restores the variable") {
  Seed s = seed_from_collection(rectangle(5, 2));
  QClusterState st = init_qcluster(s);
  for (int k = 0; k < s.num_mutable; ++k) {
    QClusterState mu = qcluster_mutate(st, k);
    QClusterState back = qcluster_mutate(mu, k);
    CHECK(back.ups[k] == st.ups[k]);
    CHECK(back.seed.labels[k] == s.labels[k]);
    CHECK(back.seed.B == s.B);
    CHECK(back.seed.L == s.L);
  }
}

TEST_CASE("degrees of cluster variables") {
  Seed s = seed_from_collection(rectangle(4, 2));
  QClusterState st = init_qcluster(s);
  std::vector<EClass> classes;
  for (const auto& lab : s.labels) classes.push_back(eclass_of(build_rank_one(4, lab)));

  for (size_t i = 0; i < s.labels.size(); ++i) {
    auto d = torus_degree(st.ups[i], classes);
    REQUIRE(d.has_value());
    CHECK(d->delta == classes[i].delta);
    CHECK(d->eta == classes[i].eta);
  }

  QClusterState mu = qcluster_mutate(st, 0);
  auto d24 = torus_degree(mu.ups[0], classes);
  REQUIRE(d24.has_value());
  EClass want = eclass_of(build_rank_one(4, make_kset(4, {2, 4})));
  CHECK(d24->delta == want.delta);
  CHECK(d24->eta == want.eta);

  QTorus mixed = QTorus::monomial({0, 0, 0, 0, 0}) + QTorus::monomial({1, 0, 0, 0, 0});
  CHECK_FALSE(torus_degree(mixed, classes).has_value());
}

TEST_CASE("lattice change preserves the form and the grading") {
  Seed s = seed_from_collection(extended_rectangle(4, {1, 2}, 2));
  XiMap xi = build_xi(s);
  int nn = static_cast<int>(s.labels.size());

  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      long long got = 0;
      for (int p = 0; p < xi.rank; ++p)
        for (int q = 0; q < xi.rank; ++q)
          got += static_cast<long long>(xi.image[i][p]) * xi.image[j][q] * xi.Lp(p, q);
      CHECK(got == s.L(i, j));
    }

  // substitution is multiplicative on random pairs
  QClusterState st = init_qcluster(s);
  std::mt19937 rng(909);
  for (int t = 0; t < 20; ++t) {
    QTorus a = random_elem(rng, nn, 2);
    QTorus b = random_elem(rng, nn, 2);
    CHECK(apply_xi(xi, torus_mul(s.L, a, b)) ==
          torus_mul(xi.Lp, apply_xi(xi, a), apply_xi(xi, b)));
  }

  // prefix interval labels land on the staircase block
  for (int i = 0; i < nn; ++i) {
    int sz = static_cast<int>(s.labels[i].size());
    bool prefix = s.labels[i].elems.back() == sz;
    if (prefix) {
      std::vector<int> e(nn, 0);
      e[i] = 1;
      QTorus img = apply_xi(xi, QTorus::monomial(e));
      REQUIRE(img.terms.size() == 1);
      const auto& g = img.terms.begin()->first;
      for (int p = 0; p < xi.rank - static_cast<int>(s.J.size()); ++p) CHECK(g[p] == 0);
    }
  }

  // degrees agree through the substitution
  std::vector<EClass> src;
  for (const auto& lab : s.labels) src.push_back(eclass_of(build_rank_one(4, lab)));
  for (int i = 0; i < nn; ++i) {
    std::vector<int> e(nn, 0);
    e[i] = 1;
    auto d0 = torus_degree(QTorus::monomial(e), src);
    auto d1 = torus_degree(apply_xi(xi, QTorus::monomial(e)), xi.target_classes);
    REQUIRE(d0.has_value());
    REQUIRE(d1.has_value());
    CHECK(d0->delta == d1->delta);
    CHECK(d0->eta == d1->eta);
  }
}

TEST_CASE("torus json round trip") {
  QTorus x = QTorus::monomial({1, -2}, QHalf::power(3, 2)) +
             QTorus::monomial({0, 4}, QHalf::power(-1) + QHalf::power(5));
  nlohmann::json j = x;
  QTorus back = j.get<QTorus>();
  CHECK(back == x);
}
