#include "arlat/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arlat {

FatPoint::FatPoint(ZVec p, int n) : point(std::move(p)), order(n) {
    if (is_zero(point)) throw shape_error("fat point: zero coordinate vector");
    if (order < 1) throw shape_error("fat point: order must be >= 1");
    point = primitive_part(point);
}

void SchemeSpec::add_point(ZVec coords, int order) {
    if (static_cast<int>(coords.size()) != t_ + 1)
        throw shape_error("scheme point: wrong coordinate length");
    FatPoint fp(std::move(coords), order);
    for (const auto& q : points_)
        if (q.point == fp.point) throw shape_error("scheme: duplicate point");
    points_.push_back(std::move(fp));
}

void SchemeSpec::add_hypersurface(const HomogeneousForm& f) {
    if (f.dimension() != t_) throw shape_error("scheme hypersurface: dimension mismatch");
    if (f.is_zero()) throw shape_error("scheme hypersurface: zero form");
    if (f.degree() < 1) throw shape_error("scheme hypersurface: constant form");
    // store integral primitive
    mpz_class l = 1;
    for (const auto& [e, c] : f.coefficients())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    hyps_.push_back(f.scaled(l).primitive());
}

void SchemeSpec::set_lci_witness(std::vector<int> degrees) {
    for (int d : degrees)
        if (d < 1) throw shape_error("lci witness: degrees must be positive");
    lci_witness_ = std::move(degrees);
}

mpz_class SchemeSpec::degree() const {
    if (empty()) return 1;
    mpz_class s = 0;
    for (const auto& p : points_) s += binomial(p.order + t_ - 1, t_);
    for (const auto& h : hyps_) s += h.degree();
    return s;
}

int SchemeSpec::dim() const {
    if (empty()) return t_;
    if (!hyps_.empty()) return t_ - 1;
    return 0;
}

SchemeSpec SchemeSpec::union_with(const SchemeSpec& other) const {
    if (t_ != other.t_) throw shape_error("scheme union: dimension mismatch");
    SchemeSpec u(t_);
    u.points_ = points_;
    for (const auto& p : other.points_) {
        bool merged = false;
        for (auto& q : u.points_)
            if (q.point == p.point) {
                q.order = std::max(q.order, p.order);
                merged = true;
                break;
            }
        if (!merged) u.points_.push_back(p);
    }
    u.hyps_ = hyps_;
    for (const auto& h : other.hyps_) {
        bool present = false;
        for (const auto& g : u.hyps_)
            if (g == h) present = true;
        if (!present) u.hyps_.push_back(h);
    }
    return u;
}

SchemeSpec SchemeSpec::component(size_t i) const {
    SchemeSpec c(t_);
    if (i < points_.size()) {
        c.points_.push_back(points_[i]);
    } else if (i - points_.size() < hyps_.size()) {
        c.hyps_.push_back(hyps_[i - points_.size()]);
    } else {
        throw shape_error("scheme component: index out of range");
    }
    return c;
}

namespace {

mpz_class falling(int n, int k) {
    mpz_class r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
}

// d/dx^alpha X^I evaluated at an integer point
mpz_class jet_entry(const Exponents& idx, const Exponents& alpha, const ZVec& p) {
    mpz_class r = 1;
    for (size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < alpha[j]) return 0;
        r *= falling(idx[j], alpha[j]);
        for (int k = 0; k < idx[j] - alpha[j]; ++k) r *= p[j];
    }
    return r;
}

// rows: all jets of order min(n-1, d) at each fat point
ZMat point_condition_rows(const SchemeSpec& x, int d, const std::vector<Exponents>& mons) {
    ZMat rows;
    for (const auto& fp : x.fat_points()) {
        int k = std::min(fp.order - 1, d);
        for (const auto& alpha : monomials(x.t(), k)) {
            ZVec row(mons.size());
            for (size_t i = 0; i < mons.size(); ++i) row[i] = jet_entry(mons[i], alpha, fp.point);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

// rows: coefficient vectors of g * X^J, |J| = d - deg g
ZMat multiples_of(const HomogeneousForm& g, int d, const std::vector<Exponents>& mons) {
    int t = g.dimension();
    ZMat rows;
    for (const auto& j : monomials(t, d - g.degree())) {
        HomogeneousForm m = form_product(g, HomogeneousForm::monomial(t, j));
        QVec qv = m.coefficient_vector();
        ZVec row(qv.size());
        for (size_t i = 0; i < qv.size(); ++i) row[i] = qv[i].get_num();
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

MetrizedLattice vanishing_lattice(const SchemeSpec& x, int d) {
    if (d < 1) throw degree_error("vanishing_lattice: D must be >= 1");
    for (const auto& h : x.hypersurfaces())
        if (d < h.degree())
            throw degree_error("vanishing_lattice: D smaller than a hypersurface degree");
    auto mons = monomials(x.t(), d);
    int n = static_cast<int>(mons.size());
    AmbientMetric metric = AmbientMetric::l2_forms(x.t(), d);

    if (x.empty()) return MetrizedLattice(n, metric, ZMat{});

    ZMat basis = integer_kernel(point_condition_rows(x, d, mons), n);
    for (const auto& g : x.hypersurfaces()) {
        ZMat m = multiples_of(g, d, mons);
        // intersect span_Z(basis) with span_Z(m): y*m lies in the Q-span of
        // basis iff it pairs to zero with ker(basis)
        ZMat kb = integer_kernel(basis, n);
        ZMat cond;
        for (const auto& k : kb) {
            ZVec row(m.size());
            for (size_t i = 0; i < m.size(); ++i) {
                mpz_class s = 0;
                for (int j = 0; j < n; ++j) s += k[j] * m[i][j];
                row[i] = s;
            }
            cond.push_back(std::move(row));
        }
        ZMat y = integer_kernel(cond, m.size());
        ZMat inter;
        for (const auto& yr : y) {
            ZVec v(n, 0);
            for (size_t i = 0; i < m.size(); ++i)
                if (yr[i] != 0)
                    for (int j = 0; j < n; ++j) v[j] += yr[i] * m[i][j];
            inter.push_back(std::move(v));
        }
        basis = std::move(inter);
    }
    return MetrizedLattice(n, metric, std::move(basis));
}

long hilbert_fn(const SchemeSpec& x, int d) {
    if (d == 0) return 1;  // constants never vanish on a subscheme of P^t
    mpz_class total = binomial(d + x.t(), x.t());
    long rank = static_cast<long>(vanishing_lattice(x, d).rank());
    return total.get_si() - rank;
}

BoundReport check_alHilbert(const SchemeSpec& x, int d) {
    long h = hilbert_fn(x, d);
    int s = x.dim();
    mpz_class upper = x.degree() * binomial(d + s, s);
    json inputs{{"H", h}, {"deg", x.degree().get_si()}, {"dim", s}};
    bool lower_ok = true;
    if (x.lci_witness_degrees()) {
        const auto& ds = *x.lci_witness_degrees();
        int dbar = -static_cast<int>(ds.size());
        for (int di : ds) dbar += di;
        if (d >= dbar) {
            mpz_class lower = x.degree() * binomial(d - dbar + s, s);
            lower_ok = mpz_class(h) >= lower;
            inputs["lower"] = lower.get_si();
            inputs["lower_holds"] = lower_ok;
        } else {
            inputs["lower"] = "not witnessed";
        }
    } else {
        inputs["lower"] = "not witnessed";
    }
    auto r = BoundReport::make_exact("alHilbert.1", static_cast<double>(h), upper.get_d(),
                                     mpq_class(h), mpq_class(upper), inputs);
    r.holds = r.holds && lower_ok;
    return r;
}

BoundReport check_alHilbinf(const SchemeSpec& y, int d) {
    if (!y.hypersurfaces().empty())
        throw precondition_error("check_alHilbinf: fat points only");
    if (y.fat_points().empty()) throw precondition_error("check_alHilbinf: empty configuration");
    int n = 1;
    for (const auto& p : y.fat_points()) n = std::max(n, p.order);
    long h = hilbert_fn(y, d);
    mpz_class bound = mpz_class(static_cast<long>(y.fat_points().size())) *
                      binomial(n + y.t() - 1, y.t());
    return BoundReport::make_exact(
        "alHilbinf", static_cast<double>(h), bound.get_d(), mpq_class(h), mpq_class(bound),
        json{{"n", n}, {"points", y.fat_points().size()}, {"D", d}});
}

std::vector<int> combine_avoiding_zeros(const std::vector<QVec>& vectors) {
    size_t n = vectors.size();
    if (n == 0) throw precondition_error("combine_avoiding_zeros: no vectors");
    for (size_t i = 0; i < n; ++i) {
        if (vectors[i].size() != n)
            throw precondition_error("combine_avoiding_zeros: vectors must have length n");
        if (vectors[i][i] == 0)
            throw precondition_error("combine_avoiding_zeros: diagonal hypothesis violated");
    }
    std::vector<int> m{1};
    for (size_t k = 2; k <= n; ++k) {
        // w = current combination restricted to the first k coordinates
        QVec w(k, 0);
        for (size_t i = 0; i < k - 1; ++i)
            if (m[i] != 0)
                for (size_t j = 0; j < k; ++j) w[j] += m[i] * vectors[i][j];
        if (w[k - 1] != 0) {
            m.push_back(0);
            continue;
        }
        const QVec& u = vectors[k - 1];
        int pick = 0;
        for (int cand = 1; cand <= static_cast<int>(n); ++cand) {
            bool ok = true;
            for (size_t j = 0; j + 1 < k; ++j) {
                if (u[j] == 0) continue;
                if (mpq_class(cand) == -w[j] / u[j]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                pick = cand;
                break;
            }
        }
        if (pick == 0) throw error("combine_avoiding_zeros: no admissible multiplier (bug)");
        m.push_back(pick);
    }
    return m;
}

namespace {

// Condition functionals of a single component, in a deterministic order:
// jets for a fat point, HNF annihilator rows for a hypersurface.
QMat component_functionals(const SchemeSpec& comp, int d) {
    auto mons = monomials(comp.t(), d);
    QMat rows;
    if (!comp.fat_points().empty()) {
        for (const auto& r : point_condition_rows(comp, d, mons)) {
            QVec q(r.size());
            for (size_t i = 0; i < r.size(); ++i) q[i] = r[i];
            rows.push_back(std::move(q));
        }
    } else {
        ZMat m = multiples_of(comp.hypersurfaces()[0], d, mons);
        for (const auto& r : integer_kernel(m, mons.size())) {
            QVec q(r.size());
            for (size_t i = 0; i < r.size(); ++i) q[i] = r[i];
            rows.push_back(std::move(q));
        }
    }
    return rows;
}

mpq_class pair_with(const QVec& functional, const HomogeneousForm& f) {
    QVec c = f.coefficient_vector();
    mpq_class s = 0;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) s += functional[i] * c[i];
    return s;
}

}  // namespace

InterpolationResult interpolate(const SchemeSpec& y, const SchemeSpec& x, int d) {
    size_t n = x.component_count();
    if (n == 0) throw precondition_error("interpolate: X has no components");
    MetrizedLattice e = vanishing_lattice(y, d);

    std::vector<HomogeneousForm> parts;
    std::vector<QVec> functionals;  // the chosen functional per component
    double max_bound = -std::numeric_limits<double>::infinity();
    mpq_class max_bound_det = 0;
    size_t max_bound_rank = 0;

    for (size_t i = 0; i < n; ++i) {
        SchemeSpec u = y.union_with(x.component(i));
        MetrizedLattice f = vanishing_lattice(u, d);
        if (f.rank() >= e.rank()) {
            throw precondition_error("interpolate: insufficient degree (rk I_Y = " +
                                     std::to_string(e.rank()) + ", rk I_{Y u X_i} = " +
                                     std::to_string(f.rank()) + ")");
        }
        MetrizedLattice g = orth_complement_lattice(e, f);
        ShortVectorCertificate sv = short_vector(g);
        HomogeneousForm fi = HomogeneousForm::from_coefficient_vector(y.t(), d, sv.vector);
        if (sv.minkowski_rhs > max_bound) {
            max_bound = sv.minkowski_rhs;
            max_bound_det = g.gram_det();
            max_bound_rank = g.rank();
        }

        QMat cond = component_functionals(x.component(i), d);
        QVec chosen;
        for (const auto& row : cond)
            if (pair_with(row, fi) != 0) {
                chosen = row;
                break;
            }
        if (chosen.empty())
            throw error("interpolate: short vector pairs to zero with every functional (bug)");
        parts.push_back(std::move(fi));
        functionals.push_back(std::move(chosen));
    }

    std::vector<QVec> eval_vectors(n, QVec(n, 0));
    for (size_t j = 0; j < n; ++j)
        for (size_t i = 0; i < n; ++i) eval_vectors[j][i] = pair_with(functionals[i], parts[j]);
    std::vector<int> m = combine_avoiding_zeros(eval_vectors);

    HomogeneousForm f(y.t(), d);
    for (size_t j = 0; j < n; ++j)
        if (m[j] != 0) f = f + parts[j].scaled(m[j]);
    f = f.primitive();

    InterpolationResult res;
    res.form = f;
    res.norm_sq = l2_norm_sq(f);
    res.log_norm = 0.5 * log_mpq(res.norm_sq);
    res.minkowski_rhs = max_bound + 2.0 * std::log(static_cast<double>(n));
    res.combination = m;
    for (size_t i = 0; i < n; ++i) {
        mpq_class w = pair_with(functionals[i], f);
        if (w == 0) throw error("interpolate: combined form lost a witness (bug)");
        res.nonvanishing_witness.push_back(w);
    }
    // exact certificate: |f|^(2r) <= n^(4r) r^r det(G_max)
    mpq_class lhs = pow_q(res.norm_sq, static_cast<unsigned long>(max_bound_rank));
    mpq_class rhs = max_bound_det;
    for (size_t i = 0; i < max_bound_rank; ++i)
        rhs *= mpq_class(static_cast<unsigned long>(max_bound_rank)) *
               pow_q(mpq_class(static_cast<unsigned long>(n)), 4);
    if (lhs > rhs) throw error("interpolate: certificate violated (bug)");
    return res;
}

bool forms_coprime(const HomogeneousForm& f, const HomogeneousForm& g) {
    if (f.is_zero() || g.is_zero()) return false;
    if (f.degree() == 0 || g.degree() == 0) return true;
    int t = f.dimension();
    if (t != g.dimension()) throw shape_error("forms_coprime: dimension mismatch");
    // common factor exists iff a f = b g has a solution with deg a < deg g,
    // deg b < deg f
    auto ja = monomials(t, g.degree() - 1);
    auto jb = monomials(t, f.degree() - 1);
    auto target = monomials(t, f.degree() + g.degree() - 1);
    size_t cols = ja.size() + jb.size();
    QMat mt = qmat(target.size(), cols);  // transpose of the map matrix
    for (size_t i = 0; i < ja.size(); ++i) {
        QVec img = form_product(HomogeneousForm::monomial(t, ja[i]), f).coefficient_vector();
        for (size_t r = 0; r < target.size(); ++r) mt[r][i] = img[r];
    }
    for (size_t i = 0; i < jb.size(); ++i) {
        QVec img = form_product(HomogeneousForm::monomial(t, jb[i]), g).coefficient_vector();
        for (size_t r = 0; r < target.size(); ++r) mt[r][ja.size() + i] = -img[r];
    }
    ZMat ker = integer_kernel_rational(mt, cols);
    return ker.empty();
}

ChainResult build_chain(const SchemeSpec& y, int degree_cap) {
    if (y.t() != 2) throw precondition_error("build_chain: only P^2 is supported");
    if (y.fat_points().empty() || !y.hypersurfaces().empty())
        throw precondition_error("build_chain: Y must be a nonempty reduced point set");
    for (const auto& p : y.fat_points())
        if (p.order != 1) throw precondition_error("build_chain: Y must be reduced");

    ChainResult out;
    auto ratio_for = [&](int di, int i, const mpz_class& cycle_deg) {
        long h = hilbert_fn(y, di - 1);
        mpz_class denom = cycle_deg * binomial(di + y.t() - i, y.t() - i);
        return static_cast<double>(h) / denom.get_d();
    };

    int d1 = 0;
    for (int d = 1; d <= degree_cap; ++d) {
        if (vanishing_lattice(y, d).rank() > 0) {
            d1 = d;
            break;
        }
    }
    if (d1 == 0) {
        out.message = "cap exceeded before I_Y became nonzero";
        return out;
    }
    MetrizedLattice l1 = vanishing_lattice(y, d1);
    HomogeneousForm f1 =
        HomogeneousForm::from_coefficient_vector(2, d1, short_vector(l1).vector).primitive();
    for (const auto& p : y.fat_points()) {
        QVec pt(p.point.size());
        for (size_t i = 0; i < pt.size(); ++i) pt[i] = p.point[i];
        if (f1.evaluate(pt) != 0) throw error("build_chain: f1 does not contain Y (bug)");
    }
    out.steps.push_back({f1, d1, mpz_class(d1), ratio_for(d1, 1, mpz_class(d1))});

    for (int d2 = d1; d2 <= degree_cap; ++d2) {
        MetrizedLattice l2 = vanishing_lattice(y, d2);
        if (l2.rank() == 0) continue;
        ZMat reduced = l2.basis();
        lll_reduce(reduced, l2.metric());
        // candidate sweep: reduced basis vectors, then small escapes b_i + k b_j
        std::vector<ZVec> cands(reduced.begin(), reduced.end());
        for (size_t i = 0; i < reduced.size(); ++i)
            for (size_t j = 0; j < reduced.size() && j < 3; ++j) {
                if (i == j) continue;
                for (int k = 1; k <= d1 + 1; ++k) {
                    ZVec v = reduced[i];
                    for (size_t c = 0; c < v.size(); ++c) v[c] += k * reduced[j][c];
                    cands.push_back(std::move(v));
                }
            }
        for (const auto& cand : cands) {
            HomogeneousForm f2 = HomogeneousForm::from_coefficient_vector(2, d2, cand).primitive();
            if (f2.is_zero() || !forms_coprime(f1, f2)) continue;
            for (const auto& p : y.fat_points()) {
                QVec pt(p.point.size());
                for (size_t i = 0; i < pt.size(); ++i) pt[i] = p.point[i];
                if (f2.evaluate(pt) != 0) throw error("build_chain: f2 does not contain Y (bug)");
            }
            mpz_class deg2 = mpz_class(d1) * d2;
            out.steps.push_back({f2, d2, deg2, ratio_for(d2, 2, deg2)});
            out.complete = true;
            out.message = "chain complete";
            return out;
        }
    }
    out.message = "cap exceeded while searching for a coprime second hypersurface";
    return out;
}

}  // namespace arlat
