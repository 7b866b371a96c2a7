#pragma once

// Quantized matrix bialgebra: exact normal-form arithmetic on words in the
// generators, quantum minors, the bar involution, and the identity checks
// built from them.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qflag/subsets.hpp"

namespace qflag {

// Laurent polynomial in q with integer coefficients
struct QPoly {
  std::map<int, mpz_class> coef;  // exponent -> coefficient, zeros dropped

  static QPoly zero() { return {}; }
  static QPoly one();
  static QPoly q_power(int e, const mpz_class& c = 1);

  bool is_zero() const { return coef.empty(); }
  QPoly shifted(int e) const;  // multiply by q^e
  QPoly bar() const;           // q -> 1/q
};

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a);
QPoly operator*(const QPoly& a, const QPoly& b);
bool operator==(const QPoly& a, const QPoly& b);
bool operator!=(const QPoly& a, const QPoly& b);
std::string to_string(const QPoly& p);

// one generator x_{row, col}
using QLetter = std::pair<int, int>;
using QWord = std::vector<QLetter>;

// element in normal form: words ascending in (row, col)
struct QMat {
  std::map<QWord, QPoly> terms;

  static QMat zero() { return {}; }
  static QMat one();
  static QMat letter(int i, int j);

  bool is_zero() const { return terms.empty(); }
  QMat bar() const;  // reverse words, invert q
};

QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator-(const QMat& a);
QMat operator*(const QMat& a, const QMat& b);
QMat operator*(const QPoly& c, const QMat& a);
bool operator==(const QMat& a, const QMat& b);
bool operator!=(const QMat& a, const QMat& b);
std::string to_string(const QMat& m);

// column minor on rows 1..|I|
QMat quantum_minor(int n, const KSet& I);

// number of pairs (a, b) with a in A, b in B, a > b
long long inv_count(const std::vector<int>& A, const std::vector<int>& B);

// m with AB = q^m BA, when the products are proportional
std::optional<int> quasi_commutation_power(const QMat& a, const QMat& b);

bool verify_quasicomm(int n, const KSet& I, const KSet& J);
bool verify_lzrel1(int n, const KSet& I, const KSet& J);
bool verify_lzrel(int n, const KSet& I, const KSet& J);
bool verify_plucker(int n, const KSet& L, int a, int b, int c, int d);
bool verify_incidence(int n, const KSet& L, int a, int b, int c);
bool verify_barprod(int n, const KSet& I, const KSet& J);
// twisted commutation matches the one-sided extension test
bool bar_twist_matches_ext(int n, const KSet& I, const KSet& J);

}  // namespace qflag
