#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 60
  };
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace borekit {

/// Arbitrary-precision integer used for all exact linear algebra.
using Integer = mpz_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = DenseMatrix<Integer>;
using IntegerVector = DenseVector<Integer>;

inline std::string toString(const Integer& x) { return x.get_str(); }

}  // namespace borekit
