// SPDX-License-Identifier: Apache-2.0

#include "specpol/gram.hpp"

namespace specpol {

double hermitian_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace specpol
