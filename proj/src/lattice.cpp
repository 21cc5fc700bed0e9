#include "arlat/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "arlat/forms.hpp"

namespace arlat {

AmbientMetric AmbientMetric::identity(int n) {
    AmbientMetric m;
    m.kind = Kind::identity;
    m.dim = n;
    return m;
}

AmbientMetric AmbientMetric::diagonal(QVec w) {
    AmbientMetric m;
    m.kind = Kind::diagonal;
    m.dim = static_cast<int>(w.size());
    for (const auto& x : w)
        if (x <= 0) throw error("metric: diagonal weights must be positive");
    m.diag = std::move(w);
    return m;
}

AmbientMetric AmbientMetric::dense_gram(QMat g) {
    AmbientMetric m;
    m.kind = Kind::dense;
    m.dim = static_cast<int>(g.size());
    m.dense = std::move(g);
    return m;
}

AmbientMetric AmbientMetric::l2_forms(int t, int d) {
    auto mons = monomials(t, d);
    QVec w(mons.size());
    for (size_t i = 0; i < mons.size(); ++i) w[i] = monomial_norm_sq(mons[i]);
    AmbientMetric m = diagonal(std::move(w));
    m.l2_forms_tag = {t, d};
    return m;
}

mpq_class AmbientMetric::ip(const ZVec& x, const ZVec& y) const {
    if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
        throw shape_error("metric ip: wrong vector length");
    mpq_class s = 0;
    switch (kind) {
        case Kind::identity:
            for (int i = 0; i < dim; ++i) s += mpq_class(x[i] * y[i]);
            break;
        case Kind::diagonal:
            for (int i = 0; i < dim; ++i)
                if (x[i] != 0 && y[i] != 0) s += diag[i] * mpq_class(x[i] * y[i]);
            break;
        case Kind::dense:
            for (int i = 0; i < dim; ++i) {
                if (x[i] == 0) continue;
                mpq_class row = 0;
                for (int j = 0; j < dim; ++j)
                    if (y[j] != 0) row += dense[i][j] * mpq_class(y[j]);
                s += mpq_class(x[i]) * row;
            }
            break;
    }
    return s;
}

QMat AmbientMetric::gram_of(const ZMat& basis) const {
    size_t r = basis.size();
    QMat g = qmat(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j) {
            g[i][j] = ip(basis[i], basis[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

mpz_class AmbientMetric::denominator_lcm() const {
    mpz_class l = 1;
    auto fold = [&](const mpq_class& q) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    };
    if (kind == Kind::diagonal)
        for (const auto& q : diag) fold(q);
    if (kind == Kind::dense)
        for (const auto& row : dense)
            for (const auto& q : row) fold(q);
    return l;
}

MetrizedLattice::MetrizedLattice(int ambient_dim, AmbientMetric metric, ZMat basis)
    : ambient_dim_(ambient_dim), metric_(std::move(metric)) {
    if (metric_.dim != ambient_dim_) throw shape_error("lattice: metric dimension mismatch");
    ZMat h = hnf(basis);
    while (!h.empty() && is_zero(h.back())) h.pop_back();
    if (h.size() != basis.size()) throw error("lattice: basis rows are linearly dependent");
    basis_ = std::move(h);
    gram_ = metric_.gram_of(basis_);
    if (!basis_.empty() && determinant(gram_) <= 0)
        throw error("lattice: Gram matrix is not positive definite");
}

mpq_class MetrizedLattice::gram_det() const {
    return basis_.empty() ? mpq_class(1) : determinant(gram_);
}

bool MetrizedLattice::contains_vector(const ZVec& v) const {
    auto c = coordinates_of(ZMat{v});
    return c.has_value();
}

std::optional<ZMat> MetrizedLattice::coordinates_of(const ZMat& vectors) const {
    QMat bq = to_qmat(basis_);
    ZMat out;
    for (const auto& v : vectors) {
        QVec b(v.size());
        for (size_t i = 0; i < v.size(); ++i) b[i] = v[i];
        auto y = solve_left(bq, b);
        if (!y) return std::nullopt;
        // solve_left verifies consistency only against the row span
        QVec check(v.size(), 0);
        for (size_t i = 0; i < basis_.size(); ++i)
            for (size_t j = 0; j < v.size(); ++j) check[j] += (*y)[i] * mpq_class(basis_[i][j]);
        for (size_t j = 0; j < v.size(); ++j)
            if (check[j] != mpq_class(v[j])) return std::nullopt;
        ZVec yi(y->size());
        for (size_t i = 0; i < y->size(); ++i) {
            if ((*y)[i].get_den() != 1) return std::nullopt;
            yi[i] = (*y)[i].get_num();
        }
        out.push_back(std::move(yi));
    }
    return out;
}

bool MetrizedLattice::contains_lattice(const MetrizedLattice& other) const {
    return coordinates_of(other.basis()).has_value();
}

bool MetrizedLattice::same_lattice(const MetrizedLattice& other) const {
    return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
}

MetrizedLattice saturate(const std::vector<ZVec>& vectors, int ambient_dim,
                         const AmbientMetric& metric) {
    ZMat a;
    for (const auto& v : vectors) {
        if (static_cast<int>(v.size()) != ambient_dim)
            throw shape_error("saturate: wrong vector length");
        if (!is_zero(v)) a.push_back(v);
    }
    // ker(ker(A)) = (Q-span of A) cap Z^N; empty input falls through to rank 0
    ZMat k1 = integer_kernel(a, ambient_dim);
    ZMat sat = integer_kernel(k1, ambient_dim);
    return MetrizedLattice(ambient_dim, metric, std::move(sat));
}

MetrizedLattice saturate(const std::vector<ZVec>& vectors, int ambient_dim) {
    return saturate(vectors, ambient_dim, AmbientMetric::identity(ambient_dim));
}

DegreeValue arith_degree(const MetrizedLattice& l) {
    if (l.rank() == 0) return {1, 0.0};
    mpq_class det = l.gram_det();
    if (det <= 0) throw error("arith_degree: nonpositive Gram determinant");
    return {det, -0.5 * log_mpq(det)};
}

namespace {

ZMat transpose(const ZMat& m, size_t cols) {
    ZMat t = zmat(cols, m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace

MetrizedLattice quotient_lattice(const MetrizedLattice& e, const MetrizedLattice& f) {
    if (f.rank() == 0) return e;
    auto coords = e.coordinates_of(f.basis());
    if (!coords) throw containment_error("quotient_lattice: F is not contained in E");
    size_t n = e.rank(), fr = f.rank();

    // Column HNF of the coordinate matrix via row HNF of its transpose;
    // the pivot block must be unimodular exactly when F is saturated in E.
    auto full = hnf_full(transpose(*coords, n));
    mpz_class pivot_det = 1;
    for (size_t i = 0; i < fr; ++i) pivot_det *= full.h[i][i];
    if (abs(pivot_det) != 1)
        throw saturation_error("quotient_lattice: F is not saturated in E (torsion quotient)");

    // complement vectors: columns fr..n-1 of W^{-1}, transposed back
    ZMat extended = f.basis();
    for (size_t j = fr; j < n; ++j) {
        ZVec coord(n);
        for (size_t i = 0; i < n; ++i) coord[i] = full.uinv[i][j];
        ZVec w(e.ambient_dim(), 0);
        for (size_t i = 0; i < n; ++i)
            for (int k = 0; k < e.ambient_dim(); ++k) w[k] += coord[i] * e.basis()[i][k];
        extended.push_back(std::move(w));
    }
    QMat g = e.metric().gram_of(extended);
    QMat qgram = schur_complement(g, fr);
    return MetrizedLattice(static_cast<int>(n - fr), AmbientMetric::dense_gram(qgram),
                           z_identity(n - fr));
}

MetrizedLattice orth_complement_lattice(const MetrizedLattice& e, const MetrizedLattice& f) {
    if (f.rank() == 0) return e;
    auto coords = e.coordinates_of(f.basis());
    if (!coords) throw containment_error("orth_complement_lattice: F is not contained in E");
    auto full = hnf_full(transpose(*coords, e.rank()));
    mpz_class pivot_det = 1;
    for (size_t i = 0; i < f.rank(); ++i) pivot_det *= full.h[i][i];
    if (abs(pivot_det) != 1)
        throw saturation_error("orth_complement_lattice: F is not saturated in E");

    size_t n = e.rank();
    QMat m = qmat(f.rank(), n);
    for (size_t i = 0; i < f.rank(); ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = e.metric().ip(f.basis()[i], e.basis()[j]);
    ZMat ker = integer_kernel_rational(m, n);
    ZMat basis;
    for (const auto& y : ker) {
        ZVec v(e.ambient_dim(), 0);
        for (size_t i = 0; i < n; ++i)
            for (int k = 0; k < e.ambient_dim(); ++k) v[k] += y[i] * e.basis()[i][k];
        basis.push_back(std::move(v));
    }
    MetrizedLattice g(e.ambient_dim(), e.metric(), std::move(basis));
    if (g.rank() != e.rank() - f.rank())
        throw error("orth_complement_lattice: unexpected rank (metric not definite?)");
    return g;
}

double minkowski_bound(const MetrizedLattice& l) {
    if (l.rank() == 0) throw precondition_error("minkowski_bound: rank 0 lattice");
    double r = static_cast<double>(l.rank());
    double deg = arith_degree(l).degree;
    return -deg / r + 0.5 * std::log(r);
}

// ---- exact LLL (integral Gram-based variant) -------------------------------

namespace {

struct LllState {
    size_t n;
    std::vector<std::vector<mpz_class>> lam;  // lam[i][j], j < i
    std::vector<mpz_class> d;                 // d[0..n], d[0] = 1

    // integral Gram-Schmidt data from an integral Gram matrix
    void init(const ZMat& g) {
        n = g.size();
        lam.assign(n, std::vector<mpz_class>(n, 0));
        d.assign(n + 1, 1);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j <= i; ++j) {
                mpz_class u = g[i][j];
                for (size_t k = 0; k < j; ++k) {
                    u = d[k + 1] * u - lam[i][k] * lam[j][k];
                    mpz_class q;
                    mpz_divexact(q.get_mpz_t(), u.get_mpz_t(), d[k].get_mpz_t());
                    u = q;
                }
                if (j < i)
                    lam[i][j] = u;
                else {
                    d[i + 1] = u;
                    if (u <= 0) throw error("lll: basis is not linearly independent");
                }
            }
    }
};

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    mpz_class num = 2 * a + b;
    mpz_class den = 2 * b;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

ZMat lll_reduce(ZMat& basis, const AmbientMetric& metric) {
    size_t n = basis.size();
    ZMat u = z_identity(n);
    if (n <= 1) return u;

    mpz_class scale = metric.denominator_lcm();
    ZMat g = zmat(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= i; ++j) {
            mpq_class q = metric.ip(basis[i], basis[j]) * mpq_class(scale);
            if (q.get_den() != 1) throw error("lll: scaled Gram entry not integral");
            g[i][j] = q.get_num();
            g[j][i] = g[i][j];
        }

    LllState s;
    s.init(g);

    auto redi = [&](size_t k, size_t l) {
        if (2 * abs(s.lam[k][l]) <= s.d[l + 1]) return;
        mpz_class q = round_div(s.lam[k][l], s.d[l + 1]);
        for (size_t j = 0; j < basis[k].size(); ++j) basis[k][j] -= q * basis[l][j];
        for (size_t j = 0; j < n; ++j) u[k][j] -= q * u[l][j];
        s.lam[k][l] -= q * s.d[l + 1];
        for (size_t i = 0; i < l; ++i) s.lam[k][i] -= q * s.lam[l][i];
    };

    auto swapi = [&](size_t p) {
        std::swap(basis[p], basis[p - 1]);
        std::swap(u[p], u[p - 1]);
        for (size_t j = 0; j + 1 < p; ++j) std::swap(s.lam[p][j], s.lam[p - 1][j]);
        mpz_class lam = s.lam[p][p - 1];
        mpz_class b = s.d[p - 1] * s.d[p + 1] + lam * lam;
        mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), s.d[p].get_mpz_t());
        for (size_t i = p + 1; i < n; ++i) {
            mpz_class t = s.lam[i][p];
            mpz_class x = s.d[p + 1] * s.lam[i][p - 1] - lam * t;
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), s.d[p].get_mpz_t());
            s.lam[i][p] = x;
            mpz_class y = b * t + lam * x;
            mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), s.d[p + 1].get_mpz_t());
            s.lam[i][p - 1] = y;
        }
        s.d[p] = b;
    };

    size_t k = 1;
    while (k < n) {
        redi(k, k - 1);
        // Lovasz condition with delta = 99/100
        mpz_class lhs = 100 * (s.d[k + 1] * s.d[k - 1] + s.lam[k][k - 1] * s.lam[k][k - 1]);
        mpz_class rhs = 99 * s.d[k] * s.d[k];
        if (lhs < rhs) {
            swapi(k);
            k = (k > 1) ? k - 1 : 1;
        } else {
            for (size_t l = k - 1; l-- > 0;) redi(k, l);
            ++k;
        }
    }
    return u;
}

// ---- enumeration ------------------------------------------------------------

namespace {

// All nonzero lattice vectors with |v|^2 <= bound (exact), reported as the
// minimum found plus every coefficient vector attaining it.
struct EnumResult {
    mpq_class min_sq = -1;
    std::vector<ZVec> achievers;  // coefficient vectors
};

EnumResult enumerate_short(const QMat& gram, const mpq_class& bound) {
    size_t n = gram.size();
    // rational Gram-Schmidt: mu and squared norms
    QMat mu = q_identity(n);
    QVec bstar(n, 0);
    {
        QMat gs = gram;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < i; ++j) {
                mpq_class proj = gs[i][j] / bstar[j];
                mu[i][j] = proj;
                for (size_t k = 0; k < n; ++k) gs[i][k] -= proj * gs[j][k];
            }
            bstar[i] = gs[i][i];
            if (bstar[i] <= 0) throw error("enumerate: Gram not positive definite");
        }
    }

    EnumResult res;
    res.min_sq = bound;
    bool found = false;
    std::vector<mpz_class> x(n, 0);
    QVec centers(n, 0);

    // depth-first from the last GS level down
    auto rec = [&](auto&& self, size_t level, const mpq_class& budget) -> void {
        size_t i = level;
        // center of x_i given the choices above
        mpq_class c = 0;
        for (size_t j = i + 1; j < n; ++j) c += mu[j][i] * mpq_class(x[j]);
        double half_width = std::sqrt(std::max(0.0, mpq_class(budget / bstar[i]).get_d()));
        double cd = c.get_d();
        long lo = static_cast<long>(std::floor(-cd - half_width)) - 1;
        long hi = static_cast<long>(std::ceil(-cd + half_width)) + 1;
        for (long xi = lo; xi <= hi; ++xi) {
            mpq_class off = mpq_class(xi) + c;
            mpq_class used = bstar[i] * off * off;
            if (used > budget) continue;
            x[i] = xi;
            if (i == 0) {
                // exact squared length of the full combination
                mpq_class norm = 0;
                for (size_t a = 0; a < n; ++a) {
                    if (x[a] == 0) continue;
                    for (size_t b = 0; b < n; ++b)
                        if (x[b] != 0) norm += mpq_class(x[a] * x[b]) * gram[a][b];
                }
                bool zero = true;
                for (const auto& v : x)
                    if (v != 0) zero = false;
                if (zero) continue;
                if (!found || norm < res.min_sq) {
                    found = true;
                    res.min_sq = norm;
                    res.achievers.clear();
                }
                if (norm == res.min_sq) {
                    ZVec coeff(n);
                    for (size_t a = 0; a < n; ++a) coeff[a] = x[a];
                    res.achievers.push_back(std::move(coeff));
                }
            } else {
                self(self, i - 1, budget - used);
            }
        }
        x[i] = 0;
    };
    rec(rec, n - 1, bound);
    if (!found) res.min_sq = -1;
    return res;
}

// sign-normalized; order by (sum of |coords|, then lexicographic)
ZVec canonical_vector(std::vector<ZVec> candidates) {
    for (auto& v : candidates) {
        for (const auto& x : v) {
            if (x != 0) {
                if (x < 0)
                    for (auto& y : v) y = -y;
                break;
            }
        }
    }
    auto key_less = [](const ZVec& a, const ZVec& b) {
        mpz_class sa = 0, sb = 0;
        for (const auto& x : a) sa += abs(x);
        for (const auto& x : b) sb += abs(x);
        if (sa != sb) return sa < sb;
        return a < b;
    };
    return *std::min_element(candidates.begin(), candidates.end(), key_less);
}

}  // namespace

ShortVectorCertificate short_vector(const MetrizedLattice& l) {
    if (l.rank() == 0) throw precondition_error("short_vector: rank 0 lattice");
    size_t r = l.rank();

    ZMat reduced = l.basis();
    lll_reduce(reduced, l.metric());
    QMat gram = l.metric().gram_of(reduced);

    // best LLL basis vector
    size_t best = 0;
    for (size_t i = 1; i < r; ++i)
        if (gram[i][i] < gram[best][best]) best = i;
    mpq_class lll_best = gram[best][best];

    // exact enumeration inside the LLL ball always finds the true minimum
    EnumResult en = enumerate_short(gram, lll_best);
    if (en.min_sq <= 0) throw error("short_vector: enumeration found nothing (bug)");

    std::vector<ZVec> vectors;
    for (const auto& coeff : en.achievers) {
        ZVec v(l.ambient_dim(), 0);
        for (size_t i = 0; i < r; ++i)
            for (int k = 0; k < l.ambient_dim(); ++k) v[k] += coeff[i] * reduced[i][k];
        vectors.push_back(std::move(v));
    }
    ZVec v = canonical_vector(std::move(vectors));

    ShortVectorCertificate cert;
    cert.vector = v;
    cert.length_sq = en.min_sq;
    cert.log_length = 0.5 * log_mpq(en.min_sq);
    cert.minkowski_rhs = minkowski_bound(l);
    cert.method = (en.min_sq == lll_best) ? "lll" : "enumeration";

    // exact certificate: (|v|^2)^r <= r^r det(Gram)
    mpq_class lhs = pow_q(en.min_sq, static_cast<unsigned long>(r));
    mpq_class rhs = l.gram_det();
    for (size_t i = 0; i < r; ++i) rhs *= static_cast<unsigned long>(r);
    if (lhs > rhs)
        throw error("short_vector: Minkowski certificate failed (implementation bug)");
    return cert;
}

}  // namespace arlat
