#ifndef DRMAT_POLYNOMIAL_HPP
#define DRMAT_POLYNOMIAL_HPP

#include "drmat/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace drmat {

/// Variable identifiers: 0,1,2,... are l1,l2,l3,...; GVAR is the step variable g.
/// In the monomial order g ranks above every l variable.
inline constexpr int GVAR = -1;

struct Monomial {
    std::vector<uint32_t> l; // exponents of l1,l2,...; trailing zeros trimmed
    uint32_t g = 0;

    void trim();
    uint32_t degree() const;
    uint32_t exponent(int var) const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial quotient(const Monomial& other) const; // requires other.divides(*this)

    // graded lex; ties broken with g most significant, then lN..l1
    bool operator<(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return g == other.g && l == other.l; }
};

class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    static Poly variable(int var, uint32_t exp = 1);
    static Poly term(const Rational& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant()

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Largest l index occurring (1-based), 0 if none.
    int max_l_var() const;
    bool has_var(int var) const;
    uint32_t degree_in(int var) const;
    uint32_t total_degree() const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly& operator+=(const Poly& other);
    bool operator==(const Poly& other) const { return terms_ == other.terms_; }

    Poly mul_scalar(const Rational& c) const;
    Poly mul_monomial(const Monomial& m, const Rational& c) const;
    Poly pow(uint32_t e) const;

    Poly derivative(int var) const;
    Rational eval(const std::vector<Rational>& lvals, const Rational& gval) const;

    /// View as univariate in `var`: degree -> coefficient poly (var removed).
    std::map<uint32_t, Poly> univariate_in(int var) const;
    static Poly from_univariate(int var, const std::map<uint32_t, Poly>& coeffs);

    /// gcd of all coefficients (as in rat_gcd), 0 for the zero poly.
    Rational content() const;
    Poly primitive_part() const; // content 1, sign of leading coeff preserved

    void add_term(const Monomial& m, const Rational& c);

private:
    std::map<Monomial, Rational> terms_;
};

/// Exact division; throws division_by_zero if b == 0, std::logic_error if not divisible.
Poly poly_div_exact(const Poly& a, const Poly& b);

/// Primitive gcd with positive leading coefficient; poly_gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Deterministic text form using the fixed monomial order (descending).
std::string poly_to_string(const Poly& p);

} // namespace drmat

#endif
