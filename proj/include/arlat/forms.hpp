#pragma once

#include <map>
#include <vector>

#include "arlat/rational.hpp"

namespace arlat {

// Exponent sequence of a monomial x_0^{i_0} ... x_t^{i_t}.
using Exponents = std::vector<int>;

int exponents_norm(const Exponents& e);

// Graded-lex order: lower degree first, then lexicographically larger
// exponent sequence first (x_0^D leads its degree block).
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// All exponent sequences of degree d in t+1 variables, in graded-lex order.
std::vector<Exponents> monomials(int t, int d);

// Exact homogeneous form of degree d in t+1 variables. Coefficient map keeps
// nonzero entries only; immutable after construction.
class HomogeneousForm {
  public:
    HomogeneousForm(int t, int d) : t_(t), d_(d) {
        if (t < 0 || d < 0) throw shape_error("form: negative dimension or degree");
    }
    HomogeneousForm(int t, int d, std::map<Exponents, mpq_class, GrlexLess> coeffs);

    static HomogeneousForm monomial(int t, const Exponents& e, const mpq_class& c = 1);
    // Linear form a_0 x_0 + ... + a_t x_t.
    static HomogeneousForm linear(const QVec& a);

    int dimension() const { return t_; }
    int degree() const { return d_; }
    const std::map<Exponents, mpq_class, GrlexLess>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_integral() const;
    mpq_class coefficient(const Exponents& e) const;

    // Dense coefficient vector in the monomials(t, d) order.
    QVec coefficient_vector() const;
    static HomogeneousForm from_coefficient_vector(int t, int d, const QVec& v);
    static HomogeneousForm from_coefficient_vector(int t, int d, const ZVec& v);

    mpq_class evaluate(const QVec& point) const;
    // d/dx^alpha applied to the form, evaluated at the point.
    mpq_class derivative_at(const Exponents& alpha, const QVec& point) const;

    // Content of an integral form (gcd of coefficients; 0 for the zero form).
    mpz_class integral_content() const;
    HomogeneousForm primitive() const;

    // Substitutes 0 for the listed variables and renumbers the rest; the
    // result lives on the coordinate subspace.
    HomogeneousForm restrict_to_coordinate_subspace(const std::vector<int>& zeroed_vars) const;

    HomogeneousForm operator+(const HomogeneousForm& o) const;
    HomogeneousForm operator-(const HomogeneousForm& o) const;
    HomogeneousForm scaled(const mpq_class& c) const;
    bool operator==(const HomogeneousForm& o) const;

  private:
    int t_;
    int d_;
    std::map<Exponents, mpq_class, GrlexLess> coeffs_;
};

// sigma_t = 1/2 sum_{k<=t} sum_{m<=k} 1/m; sigma_0 = 0 by convention.
mpq_class stoll_number(int t);

// |X^I|^2_{L2} = i_0! ... i_t! t! / (D+t)!
mpq_class monomial_norm_sq(const Exponents& e);

mpq_class l2_inner_product(const HomogeneousForm& f, const HomogeneousForm& g);
mpq_class l2_norm_sq(const HomogeneousForm& f);

HomogeneousForm form_product(const HomogeneousForm& f, const HomogeneousForm& g);

// log sum |c_I|; upper bound for log |f|_inf. -inf for the zero form.
double coefficient_sup_bound(const HomogeneousForm& f);

}  // namespace arlat
