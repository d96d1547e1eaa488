#include "drmat/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace drmat {

void Monomial::trim()
{
    while (!l.empty() && l.back() == 0) l.pop_back();
}

uint32_t Monomial::degree() const
{
    uint32_t d = g;
    for (uint32_t e : l) d += e;
    return d;
}

uint32_t Monomial::exponent(int var) const
{
    if (var == GVAR) return g;
    return static_cast<std::size_t>(var) < l.size() ? l[var] : 0;
}

bool Monomial::divides(const Monomial& other) const
{
    if (g > other.g) return false;
    if (l.size() > other.l.size()) return false;
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] > other.l[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    r.g = g + other.g;
    r.l.resize(std::max(l.size(), other.l.size()), 0);
    for (std::size_t i = 0; i < l.size(); ++i) r.l[i] += l[i];
    for (std::size_t i = 0; i < other.l.size(); ++i) r.l[i] += other.l[i];
    return r;
}

Monomial Monomial::quotient(const Monomial& other) const
{
    Monomial r;
    r.g = g - other.g;
    r.l = l;
    for (std::size_t i = 0; i < other.l.size(); ++i) r.l[i] -= other.l[i];
    r.trim();
    return r;
}

bool Monomial::operator<(const Monomial& other) const
{
    uint32_t da = degree(), db = other.degree();
    if (da != db) return da < db;
    if (g != other.g) return g < other.g;
    // lex from the highest l variable down
    std::size_t n = std::max(l.size(), other.l.size());
    for (std::size_t i = n; i-- > 0;) {
        uint32_t ea = i < l.size() ? l[i] : 0;
        uint32_t eb = i < other.l.size() ? other.l[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Poly::Poly(const Rational& c)
{
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(int var, uint32_t exp)
{
    Monomial m;
    if (var == GVAR) {
        m.g = exp;
    } else {
        m.l.resize(var + 1, 0);
        m.l[var] = exp;
    }
    Poly p;
    if (exp == 0)
        p.terms_.emplace(Monomial{}, Rational(1));
    else
        p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Poly Poly::term(const Rational& c, const Monomial& m)
{
    Poly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const
{
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.degree() == 0;
}

Rational Poly::constant_value() const
{
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Poly::max_l_var() const
{
    std::size_t mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, m.l.size());
    return static_cast<int>(mx);
}

bool Poly::has_var(int var) const
{
    for (const auto& [m, c] : terms_)
        if (m.exponent(var) > 0) return true;
    return false;
}

uint32_t Poly::degree_in(int var) const
{
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

uint32_t Poly::total_degree() const
{
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

const Monomial& Poly::leading_monomial() const
{
    return terms_.rbegin()->first;
}

const Rational& Poly::leading_coeff() const
{
    return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const
{
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& other) const
{
    Poly r = *this;
    r += other;
    return r;
}

Poly& Poly::operator+=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& other) const
{
    Poly r = *this;
    for (const auto& [m, c] : other.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& other) const
{
    Poly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::mul_scalar(const Rational& c) const
{
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

Poly Poly::mul_monomial(const Monomial& mono, const Rational& c) const
{
    Poly r;
    if (c == 0) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m * mono, cc * c);
    return r;
}

Poly Poly::pow(uint32_t e) const
{
    Poly r{Rational(1)};
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

Poly Poly::derivative(int var) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exponent(var);
        if (e == 0) continue;
        Monomial mm = m;
        if (var == GVAR)
            mm.g -= 1;
        else
            mm.l[var] -= 1;
        mm.trim();
        r.add_term(mm, c * e);
    }
    return r;
}

Rational Poly::eval(const std::vector<Rational>& lvals, const Rational& gval) const
{
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.l.size(); ++i)
            for (uint32_t e = 0; e < m.l[i]; ++e) t *= lvals.at(i);
        for (uint32_t e = 0; e < m.g; ++e) t *= gval;
        acc += t;
    }
    return acc;
}

std::map<uint32_t, Poly> Poly::univariate_in(int var) const
{
    std::map<uint32_t, Poly> r;
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exponent(var);
        Monomial mm = m;
        if (var == GVAR)
            mm.g = 0;
        else if (static_cast<std::size_t>(var) < mm.l.size())
            mm.l[var] = 0;
        mm.trim();
        r[e].add_term(mm, c);
    }
    return r;
}

Poly Poly::from_univariate(int var, const std::map<uint32_t, Poly>& coeffs)
{
    Poly r;
    for (const auto& [e, p] : coeffs) {
        Poly v = Poly::variable(var, e);
        r += p * v;
    }
    return r;
}

Rational Poly::content() const
{
    Rational g(0);
    for (const auto& [m, c] : terms_) g = rat_gcd(g, c);
    return g;
}

Poly Poly::primitive_part() const
{
    if (is_zero()) return *this;
    Rational c = content();
    return mul_scalar(Rational(1) / c);
}

Poly poly_div_exact(const Poly& a, const Poly& b)
{
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    Poly rem = a;
    Poly quot;
    while (!rem.is_zero()) {
        const Monomial& mr = rem.leading_monomial();
        const Monomial& mb = b.leading_monomial();
        if (!mb.divides(mr)) throw std::logic_error("poly_div_exact: not divisible");
        Monomial q = mr.quotient(mb);
        Rational c = rem.leading_coeff() / b.leading_coeff();
        quot.add_term(q, c);
        rem = rem - b.mul_monomial(q, c);
    }
    return quot;
}

namespace {

// pseudo-remainder of a by b in variable var (both nonzero, deg_var a >= deg_var b)
Poly pseudo_rem(Poly a, const Poly& b, int var)
{
    auto bu = b.univariate_in(var);
    uint32_t db = bu.rbegin()->first;
    const Poly& lcb = bu.rbegin()->second;
    while (!a.is_zero()) {
        auto au = a.univariate_in(var);
        uint32_t da = au.rbegin()->first;
        if (da < db) break;
        const Poly& lca = au.rbegin()->second;
        Poly shift = Poly::variable(var, da - db);
        a = a * lcb - b * lca * shift;
    }
    return a;
}

// content of a viewed as univariate in var: poly gcd of the coefficients
Poly poly_content_in(const Poly& a, int var)
{
    Poly c;
    for (const auto& [e, p] : a.univariate_in(var)) c = poly_gcd(c, p);
    return c;
}

// ---- heuristic gcd (GCDHEU): evaluate at a large integer, take the integer
// gcd recursively, reconstruct coefficients from balanced xi-adic digits and
// verify the candidate by trial division.

std::optional<Poly> poly_try_div(const Poly& a, const Poly& b)
{
    Poly rem = a;
    Poly quot;
    while (!rem.is_zero()) {
        const Monomial& mr = rem.leading_monomial();
        const Monomial& mb = b.leading_monomial();
        if (!mb.divides(mr)) return std::nullopt;
        Monomial q = mr.quotient(mb);
        Rational c = rem.leading_coeff() / b.leading_coeff();
        quot.add_term(q, c);
        rem = rem - b.mul_monomial(q, c);
    }
    return quot;
}

Integer int_maxnorm(const Poly& p)
{
    Integer m(0);
    for (const auto& [mon, c] : p.terms()) {
        Integer v = num(c);
        if (v < 0) v = -v;
        if (v > m) m = v;
    }
    return m;
}

Poly eval_var_at(const Poly& p, int var, const Integer& xi)
{
    std::vector<Integer> pw{Integer(1)};
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        uint32_t e = m.exponent(var);
        while (pw.size() <= e) pw.push_back(pw.back() * xi);
        Monomial red = m;
        if (var == GVAR)
            red.g = 0;
        else if (static_cast<std::size_t>(var) < red.l.size())
            red.l[var] = 0;
        red.trim();
        out.add_term(red, c * Rational(pw[e]));
    }
    return out;
}

// balanced remainder in (-xi/2, xi/2]; sets q so that v = q*xi + r
Integer balanced_digit(const Integer& v, const Integer& xi, Integer& q)
{
    q = v / xi; // truncates toward zero
    Integer r = v - q * xi;
    Integer half = xi / 2;
    if (r > half) {
        r -= xi;
        q += 1;
    } else if (r < -half) {
        r += xi;
        q -= 1;
    }
    return r;
}

// reconstruct a polynomial in var from the xi-adic expansion of gamma
std::optional<Poly> interpolate_xi(const Poly& gamma, int var, const Integer& xi)
{
    Poly G;
    Poly cur = gamma;
    uint32_t k = 0;
    while (!cur.is_zero()) {
        if (k > 4000) return std::nullopt;
        Poly digit, quot;
        for (const auto& [m, c] : cur.terms()) {
            Integer q;
            Integer r = balanced_digit(num(c), xi, q);
            if (r != 0) digit.add_term(m, Rational(r));
            if (q != 0) quot.add_term(m, Rational(q));
        }
        if (!digit.is_zero()) {
            Monomial vm;
            if (var == GVAR) {
                vm.g = k;
            } else {
                vm.l.resize(var + 1, 0);
                vm.l[var] = k;
            }
            vm.trim();
            G += digit.mul_monomial(vm, Rational(1));
        }
        cur = quot;
        ++k;
    }
    return G;
}

// a, b primitive with integer coefficients; vars lists the variables to eliminate
std::optional<Poly> heugcd(const Poly& a, const Poly& b, std::vector<int> vars)
{
    if (vars.empty()) {
        Integer g = int_gcd(num(a.constant_value()), num(b.constant_value()));
        return Poly(Rational(g));
    }
    int var = vars.back();
    vars.pop_back();
    Integer an = int_maxnorm(a), bn = int_maxnorm(b);
    Integer xi = 2 * (an < bn ? an : bn) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Poly A = eval_var_at(a, var, xi);
        Poly B = eval_var_at(b, var, xi);
        if (!A.is_zero() && !B.is_zero()) {
            auto gamma = heugcd(A, B, vars);
            if (gamma) {
                auto G = interpolate_xi(*gamma, var, xi);
                if (G && !G->is_zero()) {
                    Poly cand = G->primitive_part();
                    if (cand.leading_coeff() < 0) cand = -cand;
                    if (poly_try_div(a, cand) && poly_try_div(b, cand)) return cand;
                }
            }
        }
        xi = xi * 73794 / 27011 + 13;
    }
    return std::nullopt;
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b)
{
    auto normalize = [](Poly p) {
        if (p.is_zero()) return p;
        p = p.primitive_part();
        if (p.leading_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rational(1));

    // heuristic gcd on the primitive integer parts, with quick divisibility wins
    {
        Poly pa = normalize(a), pb = normalize(b);
        if (pa == pb) return pa;
        if (poly_try_div(pa, pb)) return pb;
        if (poly_try_div(pb, pa)) return pa;
        std::vector<int> vars;
        for (int v = 0; v < std::max(pa.max_l_var(), pb.max_l_var()); ++v)
            if (pa.has_var(v) || pb.has_var(v)) vars.push_back(v);
        if (pa.has_var(GVAR) || pb.has_var(GVAR)) vars.push_back(GVAR);
        auto h = heugcd(pa, pb, std::move(vars));
        if (h) return normalize(*h);
    }

    // main variable: g if present, otherwise the highest l variable
    int var;
    if (a.has_var(GVAR) || b.has_var(GVAR))
        var = GVAR;
    else
        var = std::max(a.max_l_var(), b.max_l_var()) - 1;

    if (!a.has_var(var)) return normalize(poly_gcd(poly_content_in(b, var), a));
    if (!b.has_var(var)) return normalize(poly_gcd(poly_content_in(a, var), b));

    Poly ca = poly_content_in(a, var);
    Poly cb = poly_content_in(b, var);
    Poly pa = poly_div_exact(a, ca);
    Poly pb = poly_div_exact(b, cb);
    Poly cont = poly_gcd(ca, cb);

    if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Poly r = pseudo_rem(pa, pb, var);
        pa = pb;
        if (r.is_zero()) {
            pb = Poly{};
        } else {
            Poly cr = poly_content_in(r, var);
            pb = poly_div_exact(r, cr);
        }
    }
    return normalize(cont * pa);
}

std::string poly_to_string(const Poly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending monomial order
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        Rational c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < m.l.size(); ++i) {
            if (m.l[i] == 0) continue;
            std::string f = "l" + std::to_string(i + 1);
            if (m.l[i] > 1) f += "^" + std::to_string(m.l[i]);
            factors.push_back(f);
        }
        if (m.g > 0) {
            std::string f = "g";
            if (m.g > 1) f += "^" + std::to_string(m.g);
            factors.push_back(f);
        }
        if (factors.empty()) {
            os << to_string(c);
        } else {
            bool wrote = false;
            if (c != 1) {
                os << to_string(c);
                wrote = true;
            }
            for (const auto& f : factors) {
                if (wrote) os << "*";
                os << f;
                wrote = true;
            }
        }
    }
    return os.str();
}

} // namespace drmat
