#include "drmat/forms.hpp"

#include <algorithm>
#include <functional>

namespace drmat {

RatExpr delta_i(const RatExpr& f, int i, const RatExpr& step)
{
    if (f.is_zero()) throw zero_function_error("delta_i of the zero function");
    return f / f.shift_l(i, step);
}

void MultForm::set(std::vector<int> ascending, RatExpr v)
{
    if (static_cast<int>(ascending.size()) != k_)
        throw std::invalid_argument("tuple size mismatch");
    if (!std::is_sorted(ascending.begin(), ascending.end()))
        throw std::invalid_argument("tuple must be ascending");
    if (v.is_zero()) throw std::invalid_argument("form components must be nonzero");
    comp_[std::move(ascending)] = std::move(v);
}

RatExpr MultForm::at(std::vector<int> tuple) const
{
    // sort, counting transpositions; phi_{tau(I)} = phi_I^(sign)
    int swaps = 0;
    for (std::size_t a = 0; a < tuple.size(); ++a)
        for (std::size_t b = a + 1; b < tuple.size(); ++b)
            if (tuple[a] > tuple[b]) ++swaps;
    std::sort(tuple.begin(), tuple.end());
    auto it = comp_.find(tuple);
    RatExpr v = it == comp_.end() ? RatExpr(1) : it->second;
    return swaps % 2 ? v.inverse() : v;
}

bool MultForm::is_trivial() const
{
    for (const auto& [t, v] : comp_)
        if (!(v == RatExpr(1))) return false;
    return true;
}

MultForm d_gamma(const MultForm& phi, const RatExpr& step, const GradedSpace& space)
{
    int N = phi.N(), k = phi.degree();
    MultForm out(N, k + 1);
    std::vector<int> tuple(k + 1);
    // iterate ascending (k+1)-tuples
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == k + 1) {
            RatExpr acc(1);
            for (int s = 1; s <= k + 1; ++s) {
                std::vector<int> sub;
                for (int t = 0; t < k + 1; ++t)
                    if (t != s - 1) sub.push_back(tuple[t]);
                int i = tuple[s - 1];
                RatExpr d = delta_i(phi.at(sub), i, space.sigma(i) ? -step : step);
                acc = (s % 2 == 1) ? acc * d : acc / d;
            }
            out.set(tuple, acc);
            return;
        }
        for (int v = start; v <= N; ++v) {
            tuple[pos] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
    return out;
}

namespace {

// univariate view of an expression in the single variable l_var
struct UniRat {
    std::vector<Rational> num, den; // ascending coefficients
};

std::vector<Rational> uni_coeffs(const Poly& p, int var0)
{
    std::vector<Rational> c(p.degree_in(var0) + 1, Rational(0));
    for (const auto& [m, coef] : p.terms()) {
        for (std::size_t i = 0; i < m.l.size(); ++i)
            if (m.l[i] > 0 && static_cast<int>(i) != var0)
                throw quantization_not_found("coefficient not univariate");
        if (m.g > 0) throw quantization_not_found("coefficient depends on g");
        c[m.exponent(var0)] = coef;
    }
    return c;
}

Rational poly_eval1(const std::vector<Rational>& c, const Rational& x)
{
    Rational acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<Rational> poly_deriv1(const std::vector<Rational>& c)
{
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rational(i));
    return d;
}

// deflate by (x - r); remainder must be zero
std::vector<Rational> deflate(const std::vector<Rational>& c, const Rational& r)
{
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + carry * r;
    }
    if (carry != 0) throw quantization_not_found("deflation failed");
    return q;
}

std::vector<Integer> bounded_divisors(Integer n, std::size_t budget = 200000)
{
    if (n < 0) n = -n;
    std::vector<Integer> divs;
    if (n == 0) return divs;
    Integer d = 1;
    std::size_t steps = 0;
    while (d * d <= n) {
        if (++steps > budget) throw quantization_not_found("divisor search budget exhausted");
        if (n % d == 0) {
            divs.push_back(d);
            divs.push_back(n / d);
        }
        ++d;
    }
    return divs;
}

// all rational roots with multiplicity; throws if a nonlinear factor remains
std::vector<Rational> rational_roots(std::vector<Rational> c)
{
    // strip trailing zero coefficients and leading zero roots
    std::vector<Rational> roots;
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    while (c.size() > 1) {
        if (c.front() == 0) {
            roots.push_back(Rational(0));
            c.erase(c.begin());
            continue;
        }
        if (c.size() == 2) {
            roots.push_back(-c[0] / c[1]);
            c = {Rational(1)};
            continue;
        }
        // clear denominators
        Integer lcm(1);
        for (const auto& x : c) lcm = int_lcm(lcm, den(x));
        std::vector<Integer> ic;
        for (const auto& x : c) ic.push_back(num(x) * (lcm / den(x)));
        bool found = false;
        for (const Integer& p : bounded_divisors(ic.front())) {
            for (const Integer& q : bounded_divisors(ic.back())) {
                for (int sgn : {1, -1}) {
                    Rational cand(sgn * p, q);
                    if (poly_eval1(c, cand) == 0) {
                        roots.push_back(cand);
                        c = deflate(c, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw quantization_not_found("no rational root in denominator factor");
    }
    return roots;
}

struct PoleDecomposition {
    Rational constant;
    std::vector<std::pair<Rational, Integer>> poles; // (location a, integer residue c)
};

// D as constant + sum c_t/(t - a_t), exactness verified by reconstruction
PoleDecomposition decompose(const RatExpr& d, int var0)
{
    PoleDecomposition out;
    auto nc = uni_coeffs(d.num(), var0);
    auto dc = uni_coeffs(d.den(), var0);
    if (nc.size() > dc.size())
        throw quantization_not_found("coefficient grows at infinity");
    out.constant = nc.size() == dc.size() ? nc.back() / dc.back() : Rational(0);
    auto dprime = poly_deriv1(dc);
    std::vector<Rational> roots = rational_roots(dc);
    std::sort(roots.begin(), roots.end());
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
        throw quantization_not_found("repeated pole");
    for (const Rational& a : roots) {
        Rational dp = poly_eval1(dprime, a);
        Rational res = poly_eval1(nc, a) / dp;
        if (den(res) != 1) throw quantization_not_found("non-integer residue");
        out.poles.emplace_back(a, num(res));
    }
    return out;
}

} // namespace

MultForm quantize_closed_2form(const TwoForm& D, const GradedSpace& space)
{
    D.require_closed();
    int N = D.N();
    if (space.dim() != N) throw std::invalid_argument("dimension mismatch");
    MultForm phi(N, 2);
    RatExpr half_g = RatExpr::g() / RatExpr(2);
    for (int i = 1; i <= N; ++i) {
        for (int j = i + 1; j <= N; ++j) {
            const RatExpr& dij = D.at(i, j);
            if (dij.is_zero()) continue;
            // D_ij must be a function of lambda_ij alone
            RatExpr uni = dij;
            for (int k = 1; k <= N; ++k)
                if (k != i) uni = uni.subst_l(k, RatExpr(0));
            RatExpr lam = RatExpr::l(i) - RatExpr::l(j);
            if (!(uni.subst_l(i, lam) == dij))
                throw quantization_not_found("D_ij is not a function of lambda_ij");
            PoleDecomposition dec = decompose(uni, i - 1);
            RatExpr f(1);
            for (const auto& [a, c] : dec.poles) {
                RatExpr base = (lam - RatExpr(Rational(a)) - half_g) /
                               (lam - RatExpr(Rational(a)) + half_g);
                long e = c.convert_to<long>();
                f = f * base.int_pow(e);
            }
            if (dec.constant != 0) {
                RatExpr k(Rational(dec.constant));
                f = f * ((RatExpr(1) - k * half_g) / (RatExpr(1) + k * half_g));
            }
            phi.set({i, j}, f);
        }
    }
    // self-verification: reciprocal, gamma-closed, first-order coefficients
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            RatExpr pij = phi.at({i, j});
            if (!(pij * phi.at({j, i}) == RatExpr(1)))
                throw quantization_not_found("candidate fails reciprocal condition");
            auto coeffs = pij.taylor_g(1);
            if (!(coeffs[0] == RatExpr(1)) || !(coeffs[1] == -D.at(i, j)))
                throw quantization_not_found("candidate fails semiclassical condition");
        }
    if (!d_gamma(phi, RatExpr::g(), space).is_trivial())
        throw quantization_not_found("candidate fails gamma-closedness");
    return phi;
}

MultForm phi_from_R(const ZeroWeightOp& R, const RatExpr& q)
{
    const GradedSpace& sp = R.space();
    int N = sp.dim();
    auto comp = [&](int i, int j) {
        RatExpr si(sp.sigma(i) ? -1 : 1);
        RatExpr sij((sp.sigma(i) + sp.sigma(j)) % 2 ? -1 : 1);
        if (R.alpha(i, j).is_zero())
            throw std::invalid_argument("phi_from_R: alpha_ij is identically zero");
        return (si * R.beta(i, j) + sij * q) / R.alpha(i, j);
    };
    MultForm phi(N, 2);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            RatExpr pij = comp(i, j), pji = comp(j, i);
            if (!(pij * pji == RatExpr(1)))
                throw std::invalid_argument("phi_from_R: reciprocal condition fails");
            phi.set({i, j}, pij);
        }
    return phi;
}

} // namespace drmat
