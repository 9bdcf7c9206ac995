#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

namespace tgs {

// Exact arbitrary-precision integer used for every spectral computation.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s, 10); }

}  // namespace tgs

namespace Eigen {

// Lets Eigen matrices carry mpz_class entries. Cost constants are rough
// relative weights; Eigen only uses them for evaluation heuristics.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

}  // namespace Eigen

namespace tgs {

using IntMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<BigInt, Eigen::Dynamic, 1>;

}  // namespace tgs
