#include "arlat/heights.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "arlat/arith_hilbert.hpp"
#include "arlat/rng.hpp"

namespace arlat {

HeightEstimate point_height(const ZVec& v) {
    if (is_zero(v)) throw precondition_error("point_height: zero vector");
    ZVec p = primitive_part(v);
    HeightEstimate h;
    h.normalized_input = (p != v);
    mpz_class n2 = 0;
    for (const auto& c : p) n2 += c * c;
    h.value = 0.5 * log_mpz(n2);
    h.exact = true;
    return h;
}

namespace {

struct DenseFormD {
    int t;
    int d;
    std::vector<Exponents> mons;
    std::vector<double> coeffs;

    explicit DenseFormD(const HomogeneousForm& f)
        : t(f.dimension()), d(f.degree()), mons(monomials(f.dimension(), f.degree())) {
        coeffs.resize(mons.size());
        for (size_t i = 0; i < mons.size(); ++i) coeffs[i] = f.coefficient(mons[i]).get_d();
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& z) const {
        std::complex<double> s = 0;
        for (size_t i = 0; i < mons.size(); ++i) {
            if (coeffs[i] == 0.0) continue;
            std::complex<double> m = coeffs[i];
            for (int j = 0; j <= t; ++j)
                for (int k = 0; k < mons[i][j]; ++k) m *= z[j];
            s += m;
        }
        return s;
    }
};

}  // namespace

HeightEstimate fs_log_integral(const HomogeneousForm& f, long samples, uint64_t seed) {
    if (f.is_zero()) throw precondition_error("fs_log_integral: zero form");
    if (samples < 2) throw precondition_error("fs_log_integral: need at least 2 samples");
    DenseFormD ff(f);
    int t = f.dimension();
    int d = f.degree();
    SplitStream rng(seed, 0);
    double sum = 0, sumsq = 0;
    std::vector<std::complex<double>> z(t + 1);
    for (long s = 0; s < samples; ++s) {
        double norm2 = 0;
        for (int j = 0; j <= t; ++j) {
            double re = rng.next_gaussian();
            double im = rng.next_gaussian();
            z[j] = {re, im};
            norm2 += re * re + im * im;
        }
        double av = std::abs(ff.eval(z));
        if (av < 1e-300) av = 1e-300;
        double val = std::log(av) - 0.5 * d * std::log(norm2);
        sum += val;
        sumsq += val * val;
    }
    HeightEstimate h;
    h.samples = samples;
    h.seed = seed;
    h.value = sum / samples;
    double var = (sumsq - sum * sum / samples) / (samples - 1);
    h.stderr_ = std::sqrt(std::max(0.0, var) / samples);
    return h;
}

HeightEstimate divisor_height(const HomogeneousForm& f, long samples, uint64_t seed) {
    if (f.is_zero()) throw precondition_error("divisor_height: zero form");
    HomogeneousForm g = f;
    bool normalized = false;
    if (!g.is_integral()) {
        mpz_class l = 1;
        for (const auto& [e, c] : g.coefficients())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        g = g.scaled(l);
        normalized = true;
    }
    if (g.integral_content() != 1) {
        g = g.primitive();
        normalized = true;
    }
    HeightEstimate mc = fs_log_integral(g, samples, seed);
    mc.value += g.degree() * stoll_number(g.dimension()).get_d();
    mc.normalized_input = normalized;
    return mc;
}

HeightEstimate split_divisor_height_oracle(const HomogeneousForm& f,
                                           const std::vector<ZVec>& roots) {
    if (f.dimension() != 1) throw precondition_error("split oracle: binary forms only");
    if (f.is_zero() || !f.is_integral())
        throw precondition_error("split oracle: nonzero integral form required");
    if (static_cast<int>(roots.size()) != f.degree())
        throw error("split oracle: root count does not match the degree");

    // root (a : b) corresponds to the linear factor b x0 - a x1
    HomogeneousForm prod = HomogeneousForm::monomial(1, {0, 0});
    for (const auto& r : roots) {
        if (r.size() != 2) throw shape_error("split oracle: roots live on P^1");
        ZVec p = primitive_part(r);
        prod = form_product(prod, HomogeneousForm::linear({mpq_class(p[1]), mpq_class(-p[0])}));
    }
    // proportionality check against the primitive part of f
    HomogeneousForm fp = f.primitive();
    HomogeneousForm pp = prod.primitive();
    if (!(fp == pp) && !(fp == pp.scaled(-1)))
        throw error("split oracle: supplied roots do not multiply out to f");

    HeightEstimate h;
    h.exact = true;
    for (const auto& r : roots) h.value += point_height(r).value;
    return h;
}

namespace {

// arithmetic data of one Bezout factor
struct CycleData {
    int codim = 0;
    mpz_class deg = 1;
    double height = 0;
    double stderr_ = 0;
};

CycleData cycle_data(const SchemeSpec& s, long samples, uint64_t seed) {
    CycleData c;
    if (s.empty()) {
        c.codim = 0;
        c.deg = 1;
        c.height = stoll_number(s.t()).get_d();
        return c;
    }
    if (!s.hypersurfaces().empty()) {
        if (s.hypersurfaces().size() != 1 || !s.fat_points().empty())
            throw precondition_error("bezout: a factor must be P^t, points, or one hypersurface");
        c.codim = 1;
        c.deg = s.hypersurfaces()[0].degree();
        HeightEstimate h = divisor_height(s.hypersurfaces()[0], samples, seed);
        c.height = h.value;
        c.stderr_ = h.stderr_;
        return c;
    }
    for (const auto& p : s.fat_points())
        if (p.order != 1) throw precondition_error("bezout: point factors must be reduced");
    c.codim = s.t();
    c.deg = static_cast<long>(s.fat_points().size());
    c.height = scheme_point_height_sum(s);
    return c;
}

mpz_class binary_resultant(const HomogeneousForm& f, const HomogeneousForm& g) {
    int m = f.degree(), n = g.degree();
    auto coeff_seq = [](const HomogeneousForm& h) {
        QVec v = h.coefficient_vector();
        ZVec z(v.size());
        for (size_t i = 0; i < v.size(); ++i) z[i] = v[i].get_num();
        return z;
    };
    ZVec a = coeff_seq(f), b = coeff_seq(g);
    size_t size = m + n;
    QMat syl = qmat(size, size);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl[i][i + j] = mpq_class(a[j]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl[n + i][i + j] = mpq_class(b[j]);
    mpq_class det = determinant(syl);
    if (det.get_den() != 1) throw error("resultant: non-integer determinant (bug)");
    return det.get_num();
}

}  // namespace

BoundReport bezout_check(const SchemeSpec& x, const SchemeSpec& y,
                         const std::vector<IntersectionPoint>& intersection, long samples,
                         uint64_t seed, double tolerance_sigma) {
    if (x.t() != y.t()) throw shape_error("bezout: dimension mismatch");
    int t = x.t();
    CycleData cx = cycle_data(x, samples, seed);
    CycleData cy = cycle_data(y, samples, seed + 1);
    int p = cx.codim, q = cy.codim;
    if (p + q > t + 1) throw precondition_error("bezout: codimensions exceed t+1");

    double lhs = 0;

    if (p == 1 && q == 1 && t == 1) {
        // coprime binary forms: the intersection cycle lives over the finite
        // places and its height is log |Res(f, g)|
        const auto& f = x.hypersurfaces()[0];
        const auto& g = y.hypersurfaces()[0];
        if (!intersection.empty())
            throw precondition_error("bezout: resultant instances take no point list");
        mpz_class res = binary_resultant(f, g);
        if (res == 0) throw precondition_error("bezout: common component (resultant vanishes)");
        lhs = log_mpz(abs(res));
    } else {
        // the supplied 0-cycle: verify incidence, then sum point heights
        mpz_class mult_total = 0;
        for (const auto& ip : intersection) {
            QVec pt(ip.point.size());
            for (size_t i = 0; i < pt.size(); ++i) pt[i] = ip.point[i];
            for (const auto& h : x.hypersurfaces())
                if (h.evaluate(pt) != 0)
                    throw precondition_error("bezout: intersection point misses X");
            for (const auto& h : y.hypersurfaces())
                if (h.evaluate(pt) != 0)
                    throw precondition_error("bezout: intersection point misses Y");
            mult_total += ip.multiplicity;
        }
        if (p == 1 && q == 1 && t == 2) {
            if (!forms_coprime(x.hypersurfaces()[0], y.hypersurfaces()[0]))
                throw precondition_error("bezout: common component");
            if (mult_total != cx.deg * cy.deg)
                throw precondition_error("bezout: cycle multiplicities violate Bezout");
            for (const auto& ip : intersection)
                lhs += ip.multiplicity * point_height(ip.point).value;
        } else if ((p == t && q == 0) || (p == 0 && q == t)) {
            const SchemeSpec& pts = (p == t) ? x : y;
            for (const auto& ip : intersection) {
                bool member = false;
                for (const auto& fp : pts.fat_points())
                    if (fp.point == primitive_part(ip.point)) member = true;
                if (!member)
                    throw precondition_error("bezout: intersection must equal the point factor");
                lhs += ip.multiplicity * point_height(ip.point).value;
            }
        } else if (p + q == t + 1 && ((p == 1 && q == t) || (p == t && q == 1))) {
            // divisor against a point cycle: finite intersection, exact value
            const SchemeSpec& pts = (p == t) ? x : y;
            const HomogeneousForm& g = (p == t) ? y.hypersurfaces()[0] : x.hypersurfaces()[0];
            if (!intersection.empty())
                throw precondition_error("bezout: divisor-point instances take no point list");
            for (const auto& fp : pts.fat_points()) {
                QVec pt(fp.point.size());
                for (size_t i = 0; i < pt.size(); ++i) pt[i] = fp.point[i];
                mpq_class v = g.evaluate(pt);
                if (v == 0)
                    throw precondition_error("bezout: common component (point on the divisor)");
                lhs += log_mpz(abs(mpz_class(v.get_num())));
            }
        } else {
            throw precondition_error("bezout: unsupported instance shape");
        }
    }

    double degx = cx.deg.get_d(), degy = cy.deg.get_d();
    double rhs = degy * cx.height + degx * cy.height +
                 0.5 * (t + 1 - p - q) * std::log(2.0) * degx * degy;
    double sigma = std::hypot(degy * cx.stderr_, degx * cy.stderr_);

    BoundReport r = BoundReport::make(
        "bezout", lhs, rhs,
        json{{"p", p}, {"q", q}, {"deg_X", degx}, {"deg_Y", degy},
             {"h_X", cx.height}, {"h_Y", cy.height}, {"sigma", sigma}, {"seed", seed}});
    r.holds = (r.slack >= -tolerance_sigma * sigma);
    r.exact = (sigma == 0);
    return r;
}

BoundReport sharp_bezout_check(const std::vector<int>& zeroed_vars, const HomogeneousForm& f,
                               long samples, uint64_t seed) {
    int t = f.dimension();
    int p = static_cast<int>(zeroed_vars.size());
    if (p >= t) throw precondition_error("sharp_bezout: subspace must have dimension >= 1");
    if (f.is_zero() || !f.is_integral())
        throw precondition_error("sharp_bezout: integral nonzero form required");
    int d = f.degree();

    HomogeneousForm fx = f.restrict_to_coordinate_subspace(zeroed_vars);
    if (fx.is_zero()) throw precondition_error("sharp_bezout: f vanishes on X");

    // orthogonal projection off I_X(D): the monomials supported away from the
    // zeroed variables are exactly the ones surviving restriction
    std::vector<bool> zeroed(t + 1, false);
    for (int v : zeroed_vars) zeroed[v] = true;
    std::map<Exponents, mpq_class, GrlexLess> perp_coeffs;
    for (const auto& [e, c] : f.coefficients()) {
        bool keep = true;
        for (int j = 0; j <= t; ++j)
            if (zeroed[j] && e[j] > 0) keep = false;
        if (keep) perp_coeffs[e] = c;
    }
    HomogeneousForm fperp(t, d, std::move(perp_coeffs));
    double log_perp = 0.5 * log_mpq(l2_norm_sq(fperp));

    // lhs: height of div(f|_X) on the small projective space
    HeightEstimate lhs = divisor_height(fx, samples, seed);
    double sigma_small = stoll_number(t - p).get_d();
    double c1 = (lhs.value - d * sigma_small - log_perp) / d;

    // integral comparison core: int_X log |f| <= log |f_X^perp|_{L2(P^t)} + c2 D
    HeightEstimate intx = fs_log_integral(fx, samples, seed + 1);
    double c2 = (intx.value - log_perp) / d;

    double c_hat = std::max(c1, c2);
    BoundReport r = BoundReport::make(
        "bezext", c_hat, 10.0,
        json{{"h_X_div_f", lhs.value}, {"stderr", lhs.stderr_}, {"log_f_perp", log_perp},
             {"int_X_log_f", intx.value}, {"c1", c1}, {"c2", c2}, {"D", d}, {"p", p},
             {"seed", seed}});
    r.holds = c_hat <= 10.0;
    return r;
}

// ---- transcendence experiment ----------------------------------------------

namespace {

struct MpfComplex {
    mpf_class re, im;
};

double log_mpf(const mpf_class& x) {
    signed long exp;
    double d = mpf_get_d_2exp(&exp, x.get_mpf_t());
    return std::log(d) + static_cast<double>(exp) * M_LN2;
}

mpz_class round_mpf(const mpf_class& x) {
    mp_bitcnt_t prec = mpf_get_prec(x.get_mpf_t());
    mpf_class y(x, prec);
    y += mpf_class(0.5, prec);
    mpf_class fl(0, prec);
    mpf_floor(fl.get_mpf_t(), y.get_mpf_t());
    mpz_class z;
    mpz_set_f(z.get_mpz_t(), fl.get_mpf_t());
    return z;
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> random_unit_theta(uint64_t seed) {
    SplitStream rng(seed, 1);
    double a = rng.next_gaussian(), b = rng.next_gaussian();
    double c = rng.next_gaussian(), d = rng.next_gaussian();
    double n = std::sqrt(a * a + b * b + c * c + d * d);
    return {{a / n, b / n}, {c / n, d / n}};
}

TranscendenceProfile transcendence_profile(std::complex<double> theta0,
                                           std::complex<double> theta1, int d, double h,
                                           uint64_t seed) {
    if (d < 1) throw precondition_error("transcendence: D >= 1 required");
    if (h < 1) throw precondition_error("transcendence: H >= 1 required");
    double nrm = std::sqrt(std::norm(theta0) + std::norm(theta1));
    if (std::abs(nrm - 1.0) > 1e-9)
        throw precondition_error("transcendence: theta must be unit-normalized");
    theta0 /= nrm;
    theta1 /= nrm;

    const int prec = 384;
    const int fixed_bits = 32;
    int n = d + 1;
    auto mons = monomials(1, d);

    // theta powers at working precision (binary64 inputs are exact rationals)
    std::vector<MpfComplex> monval(n);
    {
        MpfComplex t0{mpf_class(theta0.real(), prec), mpf_class(theta0.imag(), prec)};
        MpfComplex t1{mpf_class(theta1.real(), prec), mpf_class(theta1.imag(), prec)};
        std::vector<MpfComplex> p0(d + 1), p1(d + 1);
        p0[0] = {mpf_class(1, prec), mpf_class(0, prec)};
        p1[0] = {mpf_class(1, prec), mpf_class(0, prec)};
        for (int k = 1; k <= d; ++k) {
            p0[k] = {p0[k - 1].re * t0.re - p0[k - 1].im * t0.im,
                     p0[k - 1].re * t0.im + p0[k - 1].im * t0.re};
            p1[k] = {p1[k - 1].re * t1.re - p1[k - 1].im * t1.im,
                     p1[k - 1].re * t1.im + p1[k - 1].im * t1.re};
        }
        for (int i = 0; i < n; ++i) {
            const auto& e = mons[i];
            monval[i] = {p0[e[0]].re * p1[e[1]].re - p0[e[0]].im * p1[e[1]].im,
                         p0[e[0]].re * p1[e[1]].im + p0[e[0]].im * p1[e[1]].re};
        }
    }

    std::vector<double> sqrt_w(n);
    for (int i = 0; i < n; ++i) sqrt_w[i] = std::sqrt(monomial_norm_sq(mons[i]).get_d());

    TranscendenceProfile out;
    out.theta0 = theta0;
    out.theta1 = theta1;
    out.degree_d = d;
    out.budget_h = h;
    out.rhs_paper = stoll_number(1).get_d() * d * d / 2.0 + h * d;
    out.achieved = -std::numeric_limits<double>::infinity();
    bool have_witness = false;

    auto consider = [&](const ZVec& coeff) {
        if (is_zero(coeff)) return;
        HomogeneousForm f = HomogeneousForm::from_coefficient_vector(1, d, coeff).primitive();
        mpq_class norm_sq = l2_norm_sq(f);
        double log_norm = 0.5 * log_mpq(norm_sq);
        if (log_norm > h + 1e-12) return;
        MpfComplex v{mpf_class(0, prec), mpf_class(0, prec)};
        QVec c = f.coefficient_vector();
        for (int i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            mpf_class ci(c[i], prec);
            v.re += ci * monval[i].re;
            v.im += ci * monval[i].im;
        }
        mpf_class abs2 = v.re * v.re + v.im * v.im;
        if (abs2 == 0 || log_mpf(abs2) < -600.0 * M_LN2) {
            // evaluates to zero at working precision: algebraic relation
            out.non_generic = true;
            out.achieved = std::numeric_limits<double>::infinity();
            out.witness_form = f;
            out.witness_log_norm = log_norm;
            have_witness = true;
            return;
        }
        double achieved = -0.5 * log_mpf(abs2);
        if (!have_witness || (!out.non_generic && achieved > out.achieved)) {
            out.achieved = achieved;
            out.witness_form = f;
            out.witness_log_norm = log_norm;
            have_witness = true;
        }
    };

    // monomial baseline
    for (int i = 0; i < n; ++i) {
        ZVec e(n, 0);
        e[i] = 1;
        consider(e);
        if (out.non_generic) return out;
    }

    // K-grid of augmented integer lattices; coefficient block is downweighted
    // by e^{-H} so the evaluation part dominates the reduction
    double coeff_scale = std::exp(-h) * std::ldexp(1.0, fixed_bits);
    for (int j = 4; j <= 96; j += 4) {
        ZMat rows(n, ZVec(n + 2, 0));
        for (int i = 0; i < n; ++i) {
            double a = coeff_scale * sqrt_w[i];
            mpz_class ai(std::max(1.0, std::floor(a + 0.5)));
            rows[i][i] = ai;
            mpf_class scale(1, prec);
            mpf_mul_2exp(scale.get_mpf_t(), scale.get_mpf_t(),
                         static_cast<unsigned long>(j + fixed_bits));
            rows[i][n] = round_mpf(mpf_class(monval[i].re * scale, prec));
            rows[i][n + 1] = round_mpf(mpf_class(monval[i].im * scale, prec));
        }
        ZMat u = lll_reduce(rows, AmbientMetric::identity(n + 2));
        for (const auto& coeff : u) {
            consider(coeff);
            if (out.non_generic) return out;
        }
    }

    if (!have_witness) throw error("transcendence: budget too small, no admissible form");
    return out;
}

}  // namespace arlat
