#include "drmat/constructors.hpp"

#include <sstream>

namespace drmat {

IntervalPartition::IntervalPartition(int N, std::vector<Interval> intervals)
    : N_(N), intervals_(std::move(intervals))
{
    int prev = 0;
    for (const auto& iv : intervals_) {
        if (iv.lo < 1 || iv.hi > N || iv.lo > iv.hi)
            throw std::invalid_argument("invalid interval bounds");
        if (iv.lo <= prev) throw std::invalid_argument("intervals must be disjoint and ascending");
        prev = iv.hi;
    }
}

bool IntervalPartition::same_interval(int i, int j) const
{
    for (const auto& iv : intervals_)
        if (i >= iv.lo && i <= iv.hi && j >= iv.lo && j <= iv.hi) return true;
    return false;
}

bool IntervalPartition::contains(int i) const
{
    for (const auto& iv : intervals_)
        if (i >= iv.lo && i <= iv.hi) return true;
    return false;
}

IntervalPartition IntervalPartition::parse(int N, const std::string& text)
{
    std::vector<Interval> ivs;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        auto dash = part.find('-');
        int lo, hi;
        try {
            if (dash == std::string::npos) {
                lo = hi = std::stoi(part);
            } else {
                lo = std::stoi(part.substr(0, dash));
                hi = std::stoi(part.substr(dash + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition '" + text + "'");
        }
        ivs.push_back({lo, hi});
    }
    return IntervalPartition(N, std::move(ivs));
}

std::string IntervalPartition::str() const
{
    std::string s;
    for (const auto& iv : intervals_) {
        if (!s.empty()) s += ",";
        s += std::to_string(iv.lo) + "-" + std::to_string(iv.hi);
    }
    return s;
}

TwoForm::TwoForm(int N) : N_(N), d_(static_cast<std::size_t>(N) * N, RatExpr()) {}

const RatExpr& TwoForm::at(int i, int j) const
{
    return d_.at((i - 1) * static_cast<std::size_t>(N_) + (j - 1));
}

void TwoForm::set(int i, int j, const RatExpr& v)
{
    if (i == j) {
        if (!v.is_zero()) throw std::invalid_argument("D_ii must vanish");
        return;
    }
    d_.at((i - 1) * static_cast<std::size_t>(N_) + (j - 1)) = v;
    d_.at((j - 1) * static_cast<std::size_t>(N_) + (i - 1)) = -v;
}

bool TwoForm::is_closed() const
{
    for (int i = 1; i <= N_; ++i)
        for (int j = i + 1; j <= N_; ++j)
            for (int k = j + 1; k <= N_; ++k) {
                RatExpr c = at(j, k).derivative_l(i) - at(i, k).derivative_l(j) +
                            at(i, j).derivative_l(k);
                if (!c.is_zero()) return false;
            }
    return true;
}

void TwoForm::require_closed() const
{
    if (!is_closed()) throw not_closed_error("2-form is not closed");
}

void QuasiConstant::validate() const
{
    for (const auto& m : mu)
        if (m.has_l_vars())
            throw std::invalid_argument("quasiconstant entries must be free of l variables");
}

ZeroWeightOp r_canonical(const GradedSpace& space, const IntervalPartition& X,
                         const TwoForm& D, const std::vector<Rational>& nu)
{
    int N = space.dim();
    if (X.N() != N || D.N() != N || static_cast<int>(nu.size()) != N)
        throw std::invalid_argument("dimension mismatch");
    D.require_closed();
    ZeroWeightOp r(space);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j) r.alpha(i, j) = D.at(i, j);
    // the E_ij (x) E_ji term of the (i,j) summand lands in the beta_ji slot
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (i == j || !X.same_interval(i, j)) continue;
            RatExpr lam = RatExpr::l(i) - RatExpr::l(j) - RatExpr(Rational(nu[i - 1] - nu[j - 1]));
            int sgn = space.sigma(j) ? -1 : 1;
            r.beta(j, i) = r.beta(j, i) + RatExpr(sgn) / lam;
        }
    }
    r.set_step(RatExpr(0));
    return r;
}

ZeroWeightOp r_rat(const GradedSpace& space, const IntervalPartition& X)
{
    return r_canonical(space, X, TwoForm(space.dim()),
                       std::vector<Rational>(space.dim(), Rational(0)));
}

ZeroWeightOp r_rat_prime(const GradedSpace& space, const IntervalPartition& X)
{
    int N = space.dim();
    ZeroWeightOp r(space);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (i == j || !X.same_interval(i, j)) continue;
            RatExpr inv = RatExpr(-1) / (RatExpr::l(i) - RatExpr::l(j));
            r.alpha(i, j) = inv;
            int sgn = space.sigma(i) ? -1 : 1;
            r.beta(i, j) = RatExpr(sgn) * inv;
        }
    }
    r.set_step(RatExpr(0));
    return r;
}

ZeroWeightOp R_X(const GradedSpace& space, const IntervalPartition& X, const QuasiConstant& mu)
{
    int N = space.dim();
    if (X.N() != N || static_cast<int>(mu.mu.size()) != N)
        throw std::invalid_argument("dimension mismatch");
    mu.validate();
    ZeroWeightOp R(space);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            int sgn = (space.sigma(i) + space.sigma(j)) % 2 ? -1 : 1;
            R.alpha(i, j) = RatExpr(sgn);
            if (i != j && X.same_interval(i, j)) {
                RatExpr inv =
                    RatExpr(1) / (RatExpr::l(i) - RatExpr::l(j) - mu.diff(i, j));
                R.alpha(i, j) = R.alpha(i, j) + inv;
                R.beta(i, j) = RatExpr(space.sigma(i) ? -1 : 1) * inv;
            }
        }
    }
    R.set_step(RatExpr(1));
    return R;
}

ZeroWeightOp R_rat_gamma(const GradedSpace& space, const IntervalPartition& X,
                         DiagonalConvention diag)
{
    int N = space.dim();
    if (X.N() != N) throw std::invalid_argument("dimension mismatch");
    ZeroWeightOp R(space);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            int sgn = 1;
            if (diag == DiagonalConvention::signed_diag)
                sgn = (space.sigma(i) + space.sigma(j)) % 2 ? -1 : 1;
            R.alpha(i, j) = RatExpr(sgn);
            if (i != j && X.same_interval(i, j)) {
                RatExpr t = RatExpr::g() / (RatExpr::l(i) - RatExpr::l(j));
                R.alpha(i, j) = R.alpha(i, j) + t;
                R.beta(i, j) = RatExpr(space.sigma(i) ? -1 : 1) * t;
            }
        }
    }
    R.set_step(RatExpr::g());
    return R;
}

ZeroWeightOp semiclassical_limit(const ZeroWeightOp& R)
{
    int N = R.dim();
    ZeroWeightOp r(R.space());
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            auto ca = R.alpha(i, j).taylor_g(1);
            if (!(ca[0] == RatExpr(1)))
                throw not_unital_error("operator is not Id at g = 0");
            r.alpha(i, j) = -ca[1];
            if (i != j) {
                auto cb = R.beta(i, j).taylor_g(1);
                if (!cb[0].is_zero())
                    throw not_unital_error("operator is not Id at g = 0");
                r.beta(i, j) = -cb[1];
            }
        }
    }
    r.set_step(RatExpr(0));
    return r;
}

HomOp alt_s_of_dr(const ZeroWeightOp& r)
{
    const GradedSpace& s = r.space();
    int N = s.dim();
    HomOp acc(s, 3);
    for (int k = 1; k <= N; ++k) {
        // dr pairs the derivative with the supertrace-dual basis (-1)^sigma(k) E_kk
        ZeroWeightOp dk = r.derivative_l(k);
        if (s.sigma(k)) dk = dk.scale(RatExpr(-1));
        Hom2Components c = dk.to_components();
        HomOp Ekk = HomOp::basis_E(s, k, k);
        acc = acc + place_single(Ekk, 0, s, 1) * place_in_slots(c, s, 2, 3);
        acc = acc + place_single(Ekk, 0, s, 2) * place_in_slots(c, s, 3, 1);
        acc = acc + place_single(Ekk, 0, s, 3) * place_in_slots(c, s, 1, 2);
    }
    return acc;
}

HomOp alt_s_of_dr_direct(const ZeroWeightOp& r)
{
    const GradedSpace& s = r.space();
    int N = s.dim();
    HomOp acc(s, 3);
    for (int k = 1; k <= N; ++k) {
        HomOp x = HomOp::basis_E(s, k, k); // x_k acting on V
        ZeroWeightOp dk = r.derivative_l(k);
        if (s.sigma(k)) dk = dk.scale(RatExpr(-1));
        for (const auto& sm : dk.to_components()) {
            // Alt_s(x (x) a (x) b) with |x| = 0
            HomOp t1 = super_kron(super_kron(x, sm.a), sm.b);
            HomOp t2 = super_kron(super_kron(sm.a, sm.b), x);
            HomOp t3 = super_kron(super_kron(sm.b, x), sm.a);
            if ((sm.parity_b * (sm.parity_a + 0)) % 2) t3 = -t3;
            acc = acc + t1 + t2 + t3;
        }
    }
    return acc;
}

} // namespace drmat
