#pragma once

#include "lrmc/dense.hpp"

namespace lrmc {

// The current iterate of the factorization X = L R^T; L is n x r, R is m x r.
struct FactorPair {
    DenseMat L;
    DenseMat R;

    int rank() const { return L.cols(); }
    int n() const { return L.rows(); }
    int m() const { return R.rows(); }
};

}  // namespace lrmc
