#include "drmat/ratexpr.hpp"

#include <cctype>

namespace drmat {

RatExpr::RatExpr(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw division_by_zero("zero denominator");
    normalize();
}

RatExpr RatExpr::l(int k)
{
    return RatExpr(Poly::variable(k - 1), Poly(Rational(1)));
}

RatExpr RatExpr::g()
{
    return RatExpr(Poly::variable(GVAR), Poly(Rational(1)));
}

Rational RatExpr::constant_value() const
{
    return num_.constant_value() / den_.constant_value();
}

bool RatExpr::has_l_vars() const
{
    return num_.max_l_var() > 0 || den_.max_l_var() > 0;
}

int RatExpr::max_l_var() const
{
    return std::max(num_.max_l_var(), den_.max_l_var());
}

void RatExpr::normalize()
{
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    Rational c = den_.content();
    if (den_.leading_coeff() < 0) c = -c;
    if (c != 1) {
        Rational inv = Rational(1) / c;
        num_ = num_.mul_scalar(inv);
        den_ = den_.mul_scalar(inv);
    }
}

RatExpr RatExpr::operator-() const
{
    RatExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

RatExpr RatExpr::operator+(const RatExpr& o) const
{
    return RatExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatExpr RatExpr::operator-(const RatExpr& o) const
{
    return RatExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatExpr RatExpr::operator*(const RatExpr& o) const
{
    return RatExpr(num_ * o.num_, den_ * o.den_);
}

RatExpr RatExpr::operator/(const RatExpr& o) const
{
    if (o.is_zero()) throw division_by_zero("division by the zero expression");
    return RatExpr(num_ * o.den_, den_ * o.num_);
}

RatExpr RatExpr::inverse() const
{
    if (is_zero()) throw division_by_zero("inverse of the zero expression");
    return RatExpr(den_, num_);
}

RatExpr RatExpr::int_pow(long e) const
{
    if (e < 0) return inverse().int_pow(-e);
    RatExpr r(Rational(1));
    RatExpr base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

bool RatExpr::operator<(const RatExpr& o) const
{
    return str() < o.str();
}

namespace {

RatExpr subst_poly(const Poly& p, int var, const RatExpr& value)
{
    auto uni = p.univariate_in(var);
    // Horner from the top degree down
    RatExpr acc(Rational(0));
    if (uni.empty()) return acc;
    uint32_t top = uni.rbegin()->first;
    for (uint32_t d = top + 1; d-- > 0;) {
        acc = acc * value;
        auto it = uni.find(d);
        if (it != uni.end()) acc = acc + RatExpr(it->second, Poly(Rational(1)));
    }
    return acc;
}

} // namespace

RatExpr RatExpr::subst_l(int k, const RatExpr& value) const
{
    RatExpr n = subst_poly(num_, k - 1, value);
    RatExpr d = subst_poly(den_, k - 1, value);
    return n / d;
}

RatExpr RatExpr::subst_g(const RatExpr& value) const
{
    RatExpr n = subst_poly(num_, GVAR, value);
    RatExpr d = subst_poly(den_, GVAR, value);
    return n / d;
}

RatExpr RatExpr::shift_l(int k, const RatExpr& amount) const
{
    if (amount.has_l_vars())
        throw std::invalid_argument("shift amount must not contain l variables");
    return subst_l(k, RatExpr::l(k) - amount);
}

RatExpr RatExpr::permute_l(const std::vector<int>& tau) const
{
    auto permute_poly = [&](const Poly& p) {
        Poly r;
        for (const auto& [m, c] : p.terms()) {
            Monomial mm;
            mm.g = m.g;
            for (std::size_t i = 0; i < m.l.size(); ++i) {
                if (m.l[i] == 0) continue;
                int target = tau.at(i) - 1;
                if (static_cast<std::size_t>(target) >= mm.l.size()) mm.l.resize(target + 1, 0);
                mm.l[target] = m.l[i];
            }
            r.add_term(mm, c);
        }
        return r;
    };
    return RatExpr(permute_poly(num_), permute_poly(den_));
}

RatExpr RatExpr::derivative_l(int k) const
{
    int var = k - 1;
    Poly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatExpr(n, den_ * den_);
}

Rational RatExpr::eval(const std::vector<Rational>& lvals, const Rational& gval) const
{
    Rational d = den_.eval(lvals, gval);
    if (d == 0) throw pole_error("denominator vanishes at evaluation point");
    return num_.eval(lvals, gval) / d;
}

std::vector<RatExpr> RatExpr::taylor_g(unsigned order) const
{
    auto n_uni = num_.univariate_in(GVAR);
    auto d_uni = den_.univariate_in(GVAR);
    uint32_t vn = n_uni.empty() ? 0 : n_uni.begin()->first;
    uint32_t vd = d_uni.begin()->first;
    uint32_t strip = std::min(vn, vd);
    auto coeff = [strip](const std::map<uint32_t, Poly>& u, uint32_t k) {
        auto it = u.find(k + strip);
        return it == u.end() ? Poly{} : it->second;
    };
    if (num_.is_zero()) return std::vector<RatExpr>(order + 1, RatExpr(Rational(0)));
    Poly d0 = coeff(d_uni, 0);
    if (d0.is_zero()) throw pole_error("pole at g = 0");
    RatExpr d0e(d0, Poly(Rational(1)));
    std::vector<RatExpr> c;
    for (unsigned k = 0; k <= order; ++k) {
        RatExpr acc(coeff(n_uni, k), Poly(Rational(1)));
        for (unsigned i = 1; i <= k; ++i)
            acc = acc - RatExpr(coeff(d_uni, i), Poly(Rational(1))) * c[k - i];
        c.push_back(acc / d0e);
    }
    return c;
}

std::string RatExpr::str() const
{
    if (den_.is_constant() && den_.constant_value() == 1) {
        if (num_.size() > 1) return "(" + poly_to_string(num_) + ")";
        return poly_to_string(num_);
    }
    return "(" + poly_to_string(num_) + ")/(" + poly_to_string(den_) + ")";
}

RatExpr operator+(long a, const RatExpr& b) { return RatExpr(a) + b; }
RatExpr operator-(long a, const RatExpr& b) { return RatExpr(a) - b; }
RatExpr operator*(long a, const RatExpr& b) { return RatExpr(a) * b; }

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RatExpr parse()
    {
        RatExpr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw parse_error("unexpected character", pos_);
        return e;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool accept(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    RatExpr expr()
    {
        RatExpr e = term();
        for (;;) {
            if (accept('+'))
                e = e + term();
            else if (accept('-'))
                e = e - term();
            else
                return e;
        }
    }

    RatExpr term()
    {
        RatExpr e = factor();
        for (;;) {
            if (accept('*')) {
                e = e * factor();
            } else if (accept('/')) {
                std::size_t at = pos_ - 1;
                RatExpr d = factor();
                if (d.is_zero()) throw parse_error("division by zero", at);
                e = e / d;
            } else {
                return e;
            }
        }
    }

    RatExpr factor()
    {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        RatExpr e = atom();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
                throw exponent_error("exponent must be a nonnegative integer", at);
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw exponent_error("expected nonnegative integer exponent", at);
            long exp = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                exp = exp * 10 + (s_[pos_] - '0');
                if (exp > 1000) throw exponent_error("exponent too large", at);
                ++pos_;
            }
            e = e.int_pow(exp);
        }
        return e;
    }

    RatExpr atom()
    {
        skip_ws();
        if (pos_ >= s_.size()) throw parse_error("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RatExpr e = expr();
            if (!accept(')')) throw parse_error("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RatExpr(Rational(Integer(s_.substr(start, pos_ - start))));
        }
        if (c == 'g') {
            ++pos_;
            return RatExpr::g();
        }
        if (c == 'l') {
            ++pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw parse_error("expected variable index after 'l'", pos_);
            long idx = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                idx = idx * 10 + (s_[pos_] - '0');
                if (idx > 64) throw parse_error("variable index too large", pos_);
                ++pos_;
            }
            if (idx == 0) throw parse_error("variable index must be positive", pos_);
            return RatExpr::l(static_cast<int>(idx));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }
};

} // namespace

RatExpr parse_expr(const std::string& text)
{
    return Parser(text).parse();
}

} // namespace drmat
