#ifndef DRMAT_RATEXPR_HPP
#define DRMAT_RATEXPR_HPP

#include "drmat/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace drmat {

/// Exact rational function in l1,l2,... and g, kept in canonical form:
/// gcd(num, den) = 1, den primitive with positive leading coefficient.
/// Equality of values coincides with structural equality.
class RatExpr {
public:
    RatExpr() : num_(), den_(Rational(1)) {}
    RatExpr(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatExpr(long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatExpr(Poly num, Poly den);

    static RatExpr l(int k); // l_k, 1-based
    static RatExpr g();

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const; // requires is_constant()
    bool has_l_vars() const;
    int max_l_var() const;

    RatExpr operator-() const;
    RatExpr operator+(const RatExpr& o) const;
    RatExpr operator-(const RatExpr& o) const;
    RatExpr operator*(const RatExpr& o) const;
    RatExpr operator/(const RatExpr& o) const; // throws division_by_zero
    RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
    RatExpr inverse() const;
    RatExpr int_pow(long e) const;
    bool operator==(const RatExpr& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatExpr& o) const { return !(*this == o); }
    bool operator<(const RatExpr& o) const; // arbitrary deterministic order, for containers

    /// Substitute l_k (1-based) by an arbitrary expression.
    RatExpr subst_l(int k, const RatExpr& value) const;
    /// Substitute g by an expression in g (or a constant).
    RatExpr subst_g(const RatExpr& value) const;
    /// l_k -> l_k - amount; amount must contain no l variables.
    RatExpr shift_l(int k, const RatExpr& amount) const;
    /// Simultaneous relabeling l_k -> l_{tau[k-1]} (tau a permutation, 1-based values).
    RatExpr permute_l(const std::vector<int>& tau) const;

    RatExpr derivative_l(int k) const;

    /// Exact value; throws pole_error if den vanishes at the point.
    Rational eval(const std::vector<Rational>& lvals, const Rational& gval) const;

    /// Coefficients c_0..c_order of the g-adic expansion (each g-free).
    /// Throws pole_error (PoleAtGammaZero) if the expansion does not exist.
    std::vector<RatExpr> taylor_g(unsigned order) const;

    std::string str() const;

private:
    Poly num_, den_;
    void normalize();
};

RatExpr operator+(long a, const RatExpr& b);
RatExpr operator-(long a, const RatExpr& b);
RatExpr operator*(long a, const RatExpr& b);

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct exponent_error : parse_error {
    using parse_error::parse_error;
};

RatExpr parse_expr(const std::string& text);

} // namespace drmat

#endif
