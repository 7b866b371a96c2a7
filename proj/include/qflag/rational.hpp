#pragma once

// Exact rational scalar (GMP) wired into Eigen dense types.

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace qflag {

using Rat = mpq_class;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatI = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

inline std::string rat_str(const Rat& x) { return x.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat x;
  if (x.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  x.canonicalize();
  return x;
}

}  // namespace qflag
