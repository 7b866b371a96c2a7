#pragma once

// Quantum torus over a lattice with a skew form, the cluster exchange
// recursion on it, degrees, and the change-of-lattice monomial map.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qflag/lattices.hpp"
#include "qflag/seeds.hpp"

namespace qflag {

// Laurent polynomial in q^{1/2}; exponents count half-steps
struct QHalf {
  std::map<int, long long> coef;

  static QHalf zero() { return {}; }
  static QHalf one();
  static QHalf power(int halves, long long c = 1);

  bool is_zero() const { return coef.empty(); }
  QHalf shifted(int halves) const;
};

QHalf operator+(const QHalf& a, const QHalf& b);
QHalf operator-(const QHalf& a, const QHalf& b);
QHalf operator-(const QHalf& a);
QHalf operator*(const QHalf& a, const QHalf& b);
bool operator==(const QHalf& a, const QHalf& b);
bool operator!=(const QHalf& a, const QHalf& b);
// exact division; throws domain_error otherwise
QHalf qhalf_div(const QHalf& num, const QHalf& den);
std::string to_string(const QHalf& p);

// torus element: lattice points to coefficients; the form is passed alongside
struct QTorus {
  std::map<std::vector<int>, QHalf> terms;

  static QTorus zero() { return {}; }
  static QTorus monomial(const std::vector<int>& g, const QHalf& c = QHalf::one());

  bool is_zero() const { return terms.empty(); }
};

QTorus operator+(const QTorus& a, const QTorus& b);
QTorus operator-(const QTorus& a, const QTorus& b);
QTorus operator*(const QHalf& c, const QTorus& a);
bool operator==(const QTorus& a, const QTorus& b);
bool operator!=(const QTorus& a, const QTorus& b);
std::string to_string(const QTorus& x);

QTorus torus_mul(const MatI& L, const QTorus& a, const QTorus& b);
// X with X * den == num; throws domain_error when the division is not exact
QTorus torus_div_right(const MatI& L, const QTorus& num, const QTorus& den);

// variables attached to seed positions, expressed in the initial torus
struct QClusterState {
  Seed seed;
  MatI L0;
  std::vector<QTorus> ups;
};

QClusterState init_qcluster(const Seed& s);

// q^(sum_{i>j} a_i a_j L(i,j) / 2) * product of current variables; at most one
// exponent may be -1, handled by exact right division
QTorus normalized_monomial(const QClusterState& st, const std::vector<int>& a);

QClusterState qcluster_mutate(const QClusterState& st, int k);

std::optional<EClass> torus_degree(const QTorus& x, const std::vector<EClass>& classes);

// monomial substitution onto the lattice of the quotient summands plus the
// staircase block, with the induced form
struct XiMap {
  MatI Lp;
  std::vector<std::vector<int>> image;  // per source generator
  int rank = 0;
  std::vector<EClass> target_classes;
};

XiMap build_xi(const Seed& s);
QTorus apply_xi(const XiMap& xi, const QTorus& x);

void to_json(nlohmann::json& j, const QTorus& x);
void from_json(const nlohmann::json& j, QTorus& x);

}  // namespace qflag
