#pragma once

#include <optional>
#include <utility>

#include "arlat/rational.hpp"

namespace arlat {

using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

ZMat zmat(size_t rows, size_t cols);
QMat qmat(size_t rows, size_t cols);
ZMat z_identity(size_t n);
QMat q_identity(size_t n);

QMat to_qmat(const ZMat& m);

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows at the bottom. Returns {H, U} with
// U unimodular and U*A = H. Canonical for the row lattice of A.
std::pair<ZMat, ZMat> hnf_with_transform(const ZMat& a);
ZMat hnf(const ZMat& a);

// As above but also returns V = U^{-1} (tracked, no inversion step).
struct HnfResult {
    ZMat h;
    ZMat u;
    ZMat uinv;
};
HnfResult hnf_full(const ZMat& a);

size_t rank_of_hnf(const ZMat& h);

// Basis of {x in Z^n : M x^T = 0}, emitted HNF-reduced. Saturated by
// construction.
ZMat integer_kernel(const ZMat& m, size_t ncols);

// Same kernel for a rational matrix (rows are scaled to integers first).
ZMat integer_kernel_rational(const QMat& m, size_t ncols);

mpq_class determinant(QMat a);

// Inverse of a nonsingular rational matrix.
QMat inverse(QMat a);

QMat matmul(const QMat& a, const QMat& b);
QVec matvec(const QMat& a, const QVec& x);

// Solves y * A = b over Q for a full-row-rank A; returns nullopt when b is
// outside the row span.
std::optional<QVec> solve_left(const QMat& a, const QVec& b);

// Schur complement  G_cc - G_cf G_ff^{-1} G_fc  of the leading f x f block.
QMat schur_complement(const QMat& g, size_t f);

}  // namespace arlat
