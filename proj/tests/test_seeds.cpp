#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qflag/seeds.hpp"

using namespace qflag;

namespace {

WSCollection collection_of(const Seed& s) {
  WSCollection c;
  c.n = s.n;
  c.J = s.J;
  c.sets = s.labels;
  return c;
}

}  // namespace

TEST_CASE("frozen labels are the boundary ones") {
  Seed s = seed_from_collection(rectangle(4, 2));
  REQUIRE(s.labels.size() == 5);
  CHECK(s.num_mutable == 1);
  CHECK(s.labels[0].elems == std::vector<int>{1, 3});
  CHECK(s.labels[1].elems == std::vector<int>{1, 2});
  CHECK(s.labels[2].elems == std::vector<int>{2, 3});
  CHECK(s.labels[3].elems == std::vector<int>{3, 4});
  CHECK(s.labels[4].elems == std::vector<int>{1, 4});

  for (int n = 4; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      Seed t = seed_from_collection(rectangle(n, k));
      int frozen = static_cast<int>(t.labels.size()) - t.num_mutable;
      CHECK(frozen == n);
    }
}

TEST_CASE("frozen count for blocks of sizes") {
  for (int n = 4; n <= 6; ++n)
    for (int r = 1; r < n - 1; ++r)
      for (int s = r; s <= n - 1; ++s) {
        std::vector<int> J;
        for (int t = r; t <= s; ++t) J.push_back(t);
        Seed sd = seed_from_collection(extended_rectangle(n, J, r));
        int frozen = static_cast<int>(sd.labels.size()) - sd.num_mutable;
        CHECK(frozen == (n - 1) + static_cast<int>(J.size()));
      }
}

TEST_CASE("exchange and commutation matrices on the small rectangle") {
  Seed s = seed_from_collection(rectangle(4, 2));
  // commutation row of the interior label against the boundary
  CHECK(s.L(0, 1) == -1);
  CHECK(s.L(0, 2) == 1);
  CHECK(s.L(0, 3) == 1);
  CHECK(s.L(0, 4) == 1);
  // exchange column of the interior label
  CHECK(s.B(0, 0) == 0);
  CHECK(s.B(1, 0) == 1);
  CHECK(s.B(2, 0) == -1);
  CHECK(s.B(3, 0) == 1);
  CHECK(s.B(4, 0) == -1);
  // compatibility, checked entrywise once here
  MatI prod = s.B.transpose() * s.L;
  REQUIRE(prod.rows() == 1);
  CHECK(prod(0, 0) == 2);
  for (int j = 1; j < 5; ++j) CHECK(prod(0, j) == 0);
}

TEST_CASE("sizes must be consecutive") {
  CHECK_THROWS_AS(seed_from_collection(extended_rectangle(5, {1, 3}, 1)),
                  std::invalid_argument);
  CHECK_NOTHROW(seed_from_collection(extended_rectangle(5, {1, 2}, 1)));
}

TEST_CASE("mutation flips the exchange data and finds the partner label") {
  Seed s = seed_from_collection(rectangle(4, 2));
  Seed m = mutate(s, 0);
  CHECK_FALSE(m.symbolic[0]);
  CHECK(m.labels[0].elems == std::vector<int>{2, 4});
  for (int i = 0; i < 5; ++i) CHECK(m.B(i, 0) == -s.B(i, 0));

  Seed back = mutate(m, 0);
  CHECK(back.labels[0] == s.labels[0]);
  CHECK(back.B == s.B);
  CHECK(back.L == s.L);

  CHECK_THROWS_AS(mutate(s, 1), std::out_of_range);
  CHECK_THROWS_AS(mutate(s, -1), std::out_of_range);
}

TEST_CASE("mutated seed matches the seed of the mutated collection") {
  for (int n = 4; n <= 5; ++n) {
    Seed s = seed_from_collection(rectangle(n, 2));
    for (int k = 0; k < s.num_mutable; ++k) {
      Seed m = mutate(s, k);
      if (m.symbolic[k]) continue;
      Seed rebuilt = seed_from_collection(collection_of(m));
      REQUIRE(rebuilt.num_mutable == m.num_mutable);
      for (size_t i = 0; i < m.labels.size(); ++i) CHECK(rebuilt.labels[i] == m.labels[i]);
      CHECK(rebuilt.B == m.B);
      CHECK(rebuilt.L == m.L);
    }
  }
}

TEST_CASE("mutation commutation rule against direct hom counts") {
  Seed s = seed_from_collection(rectangle(5, 2));
  for (int k = 0; k < s.num_mutable; ++k) {
    Seed m = mutate(s, k);
    if (m.symbolic[k]) continue;
    for (size_t i = 0; i < m.labels.size(); ++i) {
      if (static_cast<int>(i) == k) continue;
      long long want = dim_hom(m.labels[i], m.labels[k]) - dim_hom(m.labels[k], m.labels[i]);
      CHECK(m.L(i, k) == want);
    }
  }
}

TEST_CASE("larger block seed") {
  Seed s = seed_from_collection(extended_rectangle(7, {1, 2, 3, 4}, 3));
  CHECK(s.labels.size() == 22);
  CHECK(s.labels.size() - s.num_mutable == 10);
}

TEST_CASE("dot export") {
  Seed s = seed_from_collection(rectangle(4, 2));
  std::string dot = export_dot(s);
  CHECK(dot == export_dot(s));
  size_t arrows = 0;
  for (size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2))
    ++arrows;
  CHECK(arrows == 8);
  size_t boxes = 0;
  for (size_t p = dot.find("shape=box"); p != std::string::npos;
       p = dot.find("shape=box", p + 9))
    ++boxes;
  CHECK(boxes == 4);
  CHECK(dot.find("label=\"1,3\"") != std::string::npos);
}

TEST_CASE("seed json round trip") {
  Seed s = seed_from_collection(rectangle(4, 2));
  nlohmann::json j = s;
  CHECK(j.at("frozen").size() == 5);
  Seed back = j.get<Seed>();
  CHECK(back.num_mutable == s.num_mutable);
  CHECK(back.B == s.B);
  CHECK(back.L == s.L);
  for (size_t i = 0; i < s.labels.size(); ++i) CHECK(back.labels[i] == s.labels[i]);
  // mutation works on the parsed copy even without module data
  Seed m = mutate(back, 0);
  CHECK(m.labels[0].elems == std::vector<int>{2, 4});
}
