#include "arlat/linalg.hpp"

#include <algorithm>

namespace arlat {

ZMat zmat(size_t rows, size_t cols) { return ZMat(rows, ZVec(cols, 0)); }
QMat qmat(size_t rows, size_t cols) { return QMat(rows, QVec(cols, 0)); }

ZMat z_identity(size_t n) {
    ZMat m = zmat(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat q_identity(size_t n) {
    QMat m = qmat(n, n);
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMat to_qmat(const ZMat& m) {
    QMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].reserve(m[i].size());
        for (const auto& x : m[i]) r[i].emplace_back(x);
    }
    return r;
}

static HnfResult hnf_impl(const ZMat& a, bool track_inverse) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    ZMat h = a;
    ZMat u = z_identity(rows);
    ZMat v = track_inverse ? z_identity(rows) : ZMat{};

    // Row op on h/u is mirrored by the inverse column op on v, so v stays
    // equal to u^{-1} throughout.
    auto add_row = [&](size_t dst, size_t src, const mpz_class& q) {
        for (size_t j = 0; j < cols; ++j) h[dst][j] += q * h[src][j];
        for (size_t j = 0; j < rows; ++j) u[dst][j] += q * u[src][j];
        if (track_inverse)
            for (size_t i = 0; i < rows; ++i) v[i][src] -= q * v[i][dst];
    };
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(h[i], h[j]);
        std::swap(u[i], u[j]);
        if (track_inverse)
            for (size_t k = 0; k < rows; ++k) std::swap(v[k][i], v[k][j]);
    };
    auto negate_row = [&](size_t i) {
        for (auto& x : h[i]) x = -x;
        for (auto& x : u[i]) x = -x;
        if (track_inverse)
            for (size_t k = 0; k < rows; ++k) v[k][i] = -v[k][i];
    };

    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // eliminate below row r in column c via gcd steps
        while (true) {
            size_t piv = rows;
            for (size_t i = r; i < rows; ++i)
                if (h[i][c] != 0 &&
                    (piv == rows || mpz_cmpabs(h[i][c].get_mpz_t(), h[piv][c].get_mpz_t()) < 0))
                    piv = i;
            if (piv == rows) break;  // column is zero below r
            if (piv != r) swap_rows(r, piv);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (h[i][c] != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
                    add_row(i, r, -q);
                    if (h[i][c] != 0) clean = false;
                }
            }
            if (clean) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) negate_row(r);
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
            if (q != 0) add_row(i, r, -q);
        }
        ++r;
    }
    return {std::move(h), std::move(u), std::move(v)};
}

std::pair<ZMat, ZMat> hnf_with_transform(const ZMat& a) {
    auto res = hnf_impl(a, false);
    return {std::move(res.h), std::move(res.u)};
}

HnfResult hnf_full(const ZMat& a) { return hnf_impl(a, true); }

ZMat hnf(const ZMat& a) { return hnf_impl(a, false).h; }

size_t rank_of_hnf(const ZMat& h) {
    size_t r = 0;
    for (const auto& row : h)
        if (!is_zero(row)) ++r;
    return r;
}

ZMat integer_kernel(const ZMat& m, size_t ncols) {
    // Row-reduce the transpose with a tracked transform; transform rows over
    // the zero rows of the echelon form span the kernel.
    ZMat at = zmat(ncols, m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < ncols; ++j) at[j][i] = m[i][j];
    auto [h, u] = hnf_with_transform(at);
    ZMat ker;
    for (size_t i = 0; i < ncols; ++i)
        if (is_zero(h[i])) ker.push_back(u[i]);
    return hnf(ker);
}

ZMat integer_kernel_rational(const QMat& m, size_t ncols) {
    ZMat mi;
    mi.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        ZVec r;
        r.reserve(ncols);
        for (const auto& x : row) r.push_back(mpz_class(x.get_num() * (l / x.get_den())));
        mi.push_back(std::move(r));
    }
    return integer_kernel(mi, ncols);
}

mpq_class determinant(QMat a) {
    size_t n = a.size();
    mpq_class det = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t i = c; i < n; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        mpq_class inv = 1 / a[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] * inv;
            for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

QMat inverse(QMat a) {
    size_t n = a.size();
    QMat inv = q_identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t i = c; i < n; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw error("inverse: singular matrix");
        if (piv != c) {
            std::swap(a[piv], a[c]);
            std::swap(inv[piv], inv[c]);
        }
        mpq_class d = 1 / a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= d;
            inv[c][j] *= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            mpq_class f = a[i][c];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

QMat matmul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    QMat r = qmat(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

QVec matvec(const QMat& a, const QVec& x) {
    QVec r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

std::optional<QVec> solve_left(const QMat& a, const QVec& b) {
    // Gaussian elimination on the augmented transpose: solve A^T y^T = b^T.
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    QMat aug = qmat(cols, rows + 1);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) aug[j][i] = a[i][j];
    for (size_t j = 0; j < cols; ++j) aug[j][rows] = b[j];

    std::vector<size_t> pivot_of_col(rows, cols);
    size_t r = 0;
    for (size_t c = 0; c < rows && r < cols; ++c) {
        size_t piv = cols;
        for (size_t i = r; i < cols; ++i)
            if (aug[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == cols) continue;
        std::swap(aug[piv], aug[r]);
        mpq_class d = 1 / aug[r][c];
        for (size_t j = c; j <= rows; ++j) aug[r][j] *= d;
        for (size_t i = 0; i < cols; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            mpq_class f = aug[i][c];
            for (size_t j = c; j <= rows; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    for (size_t i = r; i < cols; ++i)
        if (aug[i][rows] != 0) return std::nullopt;  // inconsistent
    QVec y(rows, 0);
    for (size_t c = 0; c < rows; ++c)
        if (pivot_of_col[c] != cols) y[c] = aug[pivot_of_col[c]][rows];
    return y;
}

QMat schur_complement(const QMat& g, size_t f) {
    size_t n = g.size();
    size_t c = n - f;
    if (f == 0) return g;
    QMat gff = qmat(f, f), gcf = qmat(c, f), gcc = qmat(c, c);
    for (size_t i = 0; i < f; ++i)
        for (size_t j = 0; j < f; ++j) gff[i][j] = g[i][j];
    for (size_t i = 0; i < c; ++i) {
        for (size_t j = 0; j < f; ++j) gcf[i][j] = g[f + i][j];
        for (size_t j = 0; j < c; ++j) gcc[i][j] = g[f + i][f + j];
    }
    QMat t = matmul(matmul(gcf, inverse(gff)), [&] {
        QMat gfc = qmat(f, c);
        for (size_t i = 0; i < f; ++i)
            for (size_t j = 0; j < c; ++j) gfc[i][j] = g[i][f + j];
        return gfc;
    }());
    for (size_t i = 0; i < c; ++i)
        for (size_t j = 0; j < c; ++j) gcc[i][j] -= t[i][j];
    return gcc;
}

}  // namespace arlat
