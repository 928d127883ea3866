// SPDX-License-Identifier: Apache-2.0

#include "lapack_backend.hpp"

#include <complex>
#include <string>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

#include "specpol/errors.hpp"

namespace specpol::detail {

namespace {

lapack_complex_double* lp(Eigen::MatrixXcd& m) {
  return reinterpret_cast<lapack_complex_double*>(m.data());
}

void check(const char* routine, lapack_int info) {
  if (info != 0)
    throw SolverError(std::string(routine) + " failed, info = " + std::to_string(info));
}

}  // namespace

Eigen::VectorXd hermitian_eigenvalues(Eigen::MatrixXcd a) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Eigen::VectorXd values(n);
  check("zheev", LAPACKE_zheev(LAPACK_COL_MAJOR, 'N', 'L', n, lp(a), n, values.data()));
  return values;
}

void hermitian_definite_generalized(Eigen::MatrixXcd& a, Eigen::MatrixXcd b,
                                    Eigen::VectorXd& values) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  values.resize(n);
  check("zhegv", LAPACKE_zhegv(LAPACK_COL_MAJOR, 1, 'V', 'L', n, lp(a), n, lp(b), n,
                               values.data()));
}

void complex_generalized(Eigen::MatrixXcd a, Eigen::MatrixXcd b,
                         Eigen::VectorXcd& alpha, Eigen::VectorXcd& beta,
                         Eigen::MatrixXcd& right_vectors) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  alpha.resize(n);
  beta.resize(n);
  right_vectors.resize(n, n);
  Eigen::MatrixXcd vl(1, 1);
  check("zggev3",
        LAPACKE_zggev3(LAPACK_COL_MAJOR, 'N', 'V', n, lp(a), n, lp(b), n,
                       reinterpret_cast<lapack_complex_double*>(alpha.data()),
                       reinterpret_cast<lapack_complex_double*>(beta.data()),
                       reinterpret_cast<lapack_complex_double*>(vl.data()), 1,
                       reinterpret_cast<lapack_complex_double*>(right_vectors.data()),
                       n));
}

const char* backend_name() { return "lapacke-zhegv/zggev3"; }

}  // namespace specpol::detail
