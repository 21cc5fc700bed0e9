#include "arlat/forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arlat {

int exponents_norm(const Exponents& e) {
    int s = 0;
    for (int x : e) {
        if (x < 0) throw shape_error("negative exponent");
        s += x;
    }
    return s;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a > b;  // lexicographically larger sequence comes first
}

std::vector<Exponents> monomials(int t, int d) {
    std::vector<Exponents> out;
    Exponents cur(t + 1, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == t) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int i = rem; i >= 0; --i) {
            cur[pos] = i;
            self(self, pos + 1, rem - i);
        }
    };
    rec(rec, 0, d);
    return out;
}

HomogeneousForm::HomogeneousForm(int t, int d, std::map<Exponents, mpq_class, GrlexLess> coeffs)
    : t_(t), d_(d), coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (static_cast<int>(it->first.size()) != t + 1 || exponents_norm(it->first) != d)
            throw shape_error("form: exponent key has wrong order or norm");
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

HomogeneousForm HomogeneousForm::monomial(int t, const Exponents& e, const mpq_class& c) {
    std::map<Exponents, mpq_class, GrlexLess> m;
    if (c != 0) m[e] = c;
    return HomogeneousForm(t, exponents_norm(e), std::move(m));
}

HomogeneousForm HomogeneousForm::linear(const QVec& a) {
    int t = static_cast<int>(a.size()) - 1;
    std::map<Exponents, mpq_class, GrlexLess> m;
    for (int i = 0; i <= t; ++i) {
        if (a[i] == 0) continue;
        Exponents e(t + 1, 0);
        e[i] = 1;
        m[e] = a[i];
    }
    return HomogeneousForm(t, 1, std::move(m));
}

bool HomogeneousForm::is_integral() const {
    for (const auto& [e, c] : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

mpq_class HomogeneousForm::coefficient(const Exponents& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

QVec HomogeneousForm::coefficient_vector() const {
    auto mons = monomials(t_, d_);
    QVec v(mons.size(), 0);
    for (size_t i = 0; i < mons.size(); ++i) v[i] = coefficient(mons[i]);
    return v;
}

HomogeneousForm HomogeneousForm::from_coefficient_vector(int t, int d, const QVec& v) {
    auto mons = monomials(t, d);
    if (v.size() != mons.size()) throw shape_error("coefficient vector has wrong length");
    std::map<Exponents, mpq_class, GrlexLess> m;
    for (size_t i = 0; i < mons.size(); ++i)
        if (v[i] != 0) m[mons[i]] = v[i];
    return HomogeneousForm(t, d, std::move(m));
}

HomogeneousForm HomogeneousForm::from_coefficient_vector(int t, int d, const ZVec& v) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = v[i];
    return from_coefficient_vector(t, d, q);
}

mpq_class HomogeneousForm::evaluate(const QVec& point) const {
    if (static_cast<int>(point.size()) != t_ + 1) throw shape_error("evaluate: wrong point length");
    mpq_class s = 0;
    for (const auto& [e, c] : coeffs_) {
        mpq_class m = c;
        for (int j = 0; j <= t_; ++j)
            for (int k = 0; k < e[j]; ++k) m *= point[j];
        s += m;
    }
    return s;
}

mpq_class HomogeneousForm::derivative_at(const Exponents& alpha, const QVec& point) const {
    mpq_class s = 0;
    for (const auto& [e, c] : coeffs_) {
        mpq_class m = c;
        bool dead = false;
        for (int j = 0; j <= t_ && !dead; ++j) {
            if (e[j] < alpha[j]) {
                dead = true;
                break;
            }
            for (int k = 0; k < alpha[j]; ++k) m *= (e[j] - k);
            for (int k = 0; k < e[j] - alpha[j]; ++k) m *= point[j];
        }
        if (!dead) s += m;
    }
    return s;
}

mpz_class HomogeneousForm::integral_content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : coeffs_) {
        if (c.get_den() != 1) throw shape_error("content of a non-integral form");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    }
    return g;
}

HomogeneousForm HomogeneousForm::primitive() const {
    mpz_class g = integral_content();
    if (g == 0) return *this;
    mpq_class lead = coeffs_.begin()->second;
    mpq_class s = (lead < 0) ? mpq_class(-g) : mpq_class(g);
    return scaled(1 / s);
}

HomogeneousForm HomogeneousForm::restrict_to_coordinate_subspace(
    const std::vector<int>& zeroed_vars) const {
    std::vector<bool> zeroed(t_ + 1, false);
    for (int v : zeroed_vars) {
        if (v < 0 || v > t_) throw shape_error("restrict: variable index out of range");
        zeroed[v] = true;
    }
    int t_new = t_ - static_cast<int>(zeroed_vars.size());
    if (t_new < 0) throw shape_error("restrict: too many variables zeroed");
    std::map<Exponents, mpq_class, GrlexLess> m;
    for (const auto& [e, c] : coeffs_) {
        bool dies = false;
        Exponents en;
        for (int j = 0; j <= t_; ++j) {
            if (zeroed[j]) {
                if (e[j] > 0) {
                    dies = true;
                    break;
                }
            } else {
                en.push_back(e[j]);
            }
        }
        if (!dies) m[en] += c;
    }
    return HomogeneousForm(t_new, d_, std::move(m));
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
    if (t_ != o.t_ || d_ != o.d_) throw shape_error("form sum: shape mismatch");
    auto m = coeffs_;
    for (const auto& [e, c] : o.coeffs_) m[e] += c;
    return HomogeneousForm(t_, d_, std::move(m));
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const {
    return *this + o.scaled(-1);
}

HomogeneousForm HomogeneousForm::scaled(const mpq_class& c) const {
    std::map<Exponents, mpq_class, GrlexLess> m;
    if (c != 0)
        for (const auto& [e, x] : coeffs_) m[e] = x * c;
    return HomogeneousForm(t_, d_, std::move(m));
}

bool HomogeneousForm::operator==(const HomogeneousForm& o) const {
    return t_ == o.t_ && d_ == o.d_ && coeffs_ == o.coeffs_;
}

mpq_class stoll_number(int t) {
    if (t < 0) throw precondition_error("stoll_number: t must be nonnegative");
    mpq_class s = 0;
    mpq_class inner = 0;
    for (int k = 1; k <= t; ++k) {
        inner += mpq_class(1, k);
        s += inner;
    }
    return s / 2;
}

mpq_class monomial_norm_sq(const Exponents& e) {
    int t = static_cast<int>(e.size()) - 1;
    int d = exponents_norm(e);
    mpz_class num = factorial(t);
    for (int x : e) num *= factorial(x);
    mpq_class q(num, factorial(d + t));
    q.canonicalize();
    return q;
}

mpq_class l2_inner_product(const HomogeneousForm& f, const HomogeneousForm& g) {
    if (f.dimension() != g.dimension() || f.degree() != g.degree())
        throw shape_error("l2_inner_product: shape mismatch");
    mpq_class s = 0;
    for (const auto& [e, c] : f.coefficients()) {
        mpq_class cg = g.coefficient(e);
        if (cg != 0) s += c * cg * monomial_norm_sq(e);
    }
    return s;
}

mpq_class l2_norm_sq(const HomogeneousForm& f) { return l2_inner_product(f, f); }

HomogeneousForm form_product(const HomogeneousForm& f, const HomogeneousForm& g) {
    if (f.dimension() != g.dimension()) throw shape_error("form_product: dimension mismatch");
    int t = f.dimension();
    std::map<Exponents, mpq_class, GrlexLess> m;
    for (const auto& [ef, cf] : f.coefficients())
        for (const auto& [eg, cg] : g.coefficients()) {
            Exponents e(t + 1);
            for (int j = 0; j <= t; ++j) e[j] = ef[j] + eg[j];
            m[e] += cf * cg;
        }
    return HomogeneousForm(t, f.degree() + g.degree(), std::move(m));
}

double coefficient_sup_bound(const HomogeneousForm& f) {
    if (f.is_zero()) return -std::numeric_limits<double>::infinity();
    mpq_class s = 0;
    for (const auto& [e, c] : f.coefficients()) s += abs(c);
    return log_mpq(s);
}

}  // namespace arlat
