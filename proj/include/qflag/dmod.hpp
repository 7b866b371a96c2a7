#pragma once

// Finite-dimensional representations of the two algebras in play: the full
// staircase algebra on vertices 0..n-1 (two arrow chains a, b with the
// commuting-square and top-socle relations) and its vertex-0 truncation.
// Provides the staircase models, Hom spaces, trace/quotient functors, socle
// towers, the radical of End of a summand list, and minimal lifts.

#include <array>
#include <optional>
#include <vector>

#include "json.hpp"

#include "qflag/rational.hpp"
#include "qflag/subsets.hpp"

namespace qflag {

enum class Algebra { D, Pi };

struct Rep {
  Algebra algebra = Algebra::D;
  int n = 0;
  std::vector<int> dims;   // size n; dims[v] = dim at vertex v
  std::vector<MatQ> a;     // a[v]: M(v) -> M(v-1), v in [1, n)
  std::vector<MatQ> b;     // b[v]: M(v-1) -> M(v), v in [1, n)
};

// A morphism between reps: one matrix per vertex.
using RepMap = std::vector<MatQ>;

void check_rep(const Rep& m);
Rep zero_rep(int n, Algebra alg = Algebra::D);
int total_dim(const Rep& m);
bool is_zero_rep(const Rep& m);

Rep build_D0(int n);
Rep build_rank_one(int n, const KSet& I);
Rep build_T(int n, int j);      // staircase of the initial interval [1..j]
Rep build_proj(int n, int i);   // projective at vertex i, i in [0, n)
Rep build_simple(int n, int v, Algebra alg = Algebra::D);
Rep as_algebra(Rep m, Algebra alg);

Rep direct_sum(const std::vector<Rep>& parts);
RepMap compose(const RepMap& g, const RepMap& f);
RepMap identity_map(const Rep& m);

struct HomSpace {
  int dim = 0;
  std::vector<RepMap> basis;
  // Entry positions (v, r, c) that read off the coordinates of any element.
  std::vector<std::array<int, 3>> coords;
};

HomSpace hom_space(const Rep& M, const Rep& N);
int dim_hom(const Rep& M, const Rep& N);
std::vector<Rat> hom_coords(const HomSpace& H, const RepMap& f);
RepMap hom_lincomb(const HomSpace& H, const std::vector<Rat>& coeffs);

bool is_isomorphic(const Rep& M, const Rep& N);

// Submodule generated by the vertex-0 subspace, with its staircase
// multiplicities: sub = ⊕_j T_j^{t_mult[j-1]}.
struct TraceResult {
  Rep sub;
  std::vector<MatQ> inclusion;  // inclusion[v]: sub(v) -> M(v)
  std::vector<int> t_mult;      // size n, 1-indexed by staircase length
};
TraceResult trace_eta(const Rep& m);

// Quotient by the vertex-0 trace; lands in the truncated algebra.
struct QuotientResult {
  Rep rep;
  std::vector<MatQ> proj;  // proj[v]: M(v) -> rep(v)
};
QuotientResult quotient_pi(const Rep& m);

Rep restrict_to(const Rep& m, const std::vector<MatQ>& bases);
QuotientResult quotient_by(const Rep& m, const std::vector<MatQ>& bases);

std::vector<int> socle_parts(const Rep& m);
std::vector<int> top_parts(const Rep& m);
std::vector<MatQ> socle_inclusion(const Rep& m);

// Iterated socle along a vertex sequence, leftmost entry applied first.
struct SocleTower {
  Rep rep;
  std::vector<MatQ> inclusion;
};
SocleTower iterated_socle(const Rep& m, const std::vector<int>& seq);

// outer/inner are vertexwise inclusions into m with inner contained in outer;
// returns outer/inner.
Rep sub_quotient(const Rep& m, const std::vector<MatQ>& outer,
                 const std::vector<MatQ>& inner);

// Arrow counts of the quiver of End(⊕ summands): dimensions of rad/rad².
MatI end_radical_irr(const std::vector<Rep>& summands);

// Minimal extension of a truncated-algebra module to the full algebra along
// the injectives indexed by J.
Rep minimal_lift(const Rep& N, const std::vector<int>& J);

std::vector<long long> delta_dims(const Rep& m);

void to_json(nlohmann::json& j, const Rep& m);
void from_json(const nlohmann::json& j, Rep& m);

}  // namespace qflag
