#include "drmat/homop.hpp"

namespace drmat {

namespace {
int ipow(int b, int e)
{
    int r = 1;
    while (e-- > 0) r *= b;
    return r;
}
} // namespace

HomOp::HomOp(GradedSpace space, int arity)
    : space_(std::move(space)), arity_(arity), dim_(ipow(space_.dim(), arity))
{
    if (arity < 1 || arity > 3) throw std::invalid_argument("arity must be 1..3");
    entries_.assign(static_cast<std::size_t>(dim_) * dim_, RatExpr());
}

HomOp HomOp::identity(const GradedSpace& space, int arity)
{
    HomOp r(space, arity);
    for (int i = 0; i < r.dim_; ++i) r.at(i, i) = RatExpr(1);
    return r;
}

HomOp HomOp::basis_E(const GradedSpace& space, int i, int j)
{
    if (i < 1 || i > space.dim() || j < 1 || j > space.dim())
        throw std::out_of_range("basis_E index out of range");
    HomOp r(space, 1);
    r.at(i - 1, j - 1) = RatExpr(1);
    return r;
}

int HomOp::tuple_index(const std::vector<int>& t) const
{
    int idx = 0;
    for (int v : t) idx = idx * space_.dim() + (v - 1);
    return idx;
}

std::vector<int> HomOp::index_tuple(int flat) const
{
    std::vector<int> t(arity_);
    for (int s = arity_; s-- > 0;) {
        t[s] = flat % space_.dim() + 1;
        flat /= space_.dim();
    }
    return t;
}

int HomOp::tuple_parity(const std::vector<int>& t) const
{
    int p = 0;
    for (int v : t) p += space_.sigma(v);
    return p % 2;
}

bool HomOp::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool HomOp::operator==(const HomOp& o) const
{
    return space_ == o.space_ && arity_ == o.arity_ && entries_ == o.entries_;
}

HomOp HomOp::operator+(const HomOp& o) const
{
    if (space_ != o.space_ || arity_ != o.arity_) throw std::invalid_argument("space mismatch");
    HomOp r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!o.entries_[k].is_zero()) r.entries_[k] = r.entries_[k] + o.entries_[k];
    return r;
}

HomOp HomOp::operator-(const HomOp& o) const
{
    if (space_ != o.space_ || arity_ != o.arity_) throw std::invalid_argument("space mismatch");
    HomOp r = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!o.entries_[k].is_zero()) r.entries_[k] = r.entries_[k] - o.entries_[k];
    return r;
}

HomOp HomOp::operator-() const
{
    HomOp r = *this;
    for (auto& e : r.entries_)
        if (!e.is_zero()) e = -e;
    return r;
}

HomOp HomOp::operator*(const HomOp& o) const
{
    if (space_ != o.space_ || arity_ != o.arity_) throw std::invalid_argument("space mismatch");
    HomOp r(space_, arity_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const RatExpr& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                const RatExpr& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

HomOp HomOp::scale(const RatExpr& c) const
{
    HomOp r(space_, arity_);
    if (c.is_zero()) return r;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (!entries_[k].is_zero()) r.entries_[k] = entries_[k] * c;
    return r;
}

std::vector<HomOp::Witness> HomOp::nonzero_witnesses(std::size_t limit) const
{
    std::vector<Witness> w;
    for (int i = 0; i < dim_ && w.size() < limit; ++i)
        for (int j = 0; j < dim_ && w.size() < limit; ++j)
            if (!at(i, j).is_zero()) w.push_back({index_tuple(i), index_tuple(j), at(i, j)});
    return w;
}

HomOp super_kron(const HomOp& A, const HomOp& B)
{
    if (A.space() != B.space()) throw std::invalid_argument("space mismatch");
    int arity = A.arity() + B.arity();
    HomOp r(A.space(), arity);
    int db = B.dim();
    for (int ia = 0; ia < A.dim(); ++ia) {
        for (int ja = 0; ja < A.dim(); ++ja) {
            const RatExpr& av = A.at(ia, ja);
            if (av.is_zero()) continue;
            int pj = A.tuple_parity(A.index_tuple(ja));
            for (int ib = 0; ib < db; ++ib) {
                for (int jb = 0; jb < db; ++jb) {
                    const RatExpr& bv = B.at(ib, jb);
                    if (bv.is_zero()) continue;
                    int pb = (B.tuple_parity(B.index_tuple(ib)) + B.tuple_parity(B.index_tuple(jb))) % 2;
                    RatExpr v = av * bv;
                    if (pb && pj) v = -v;
                    r.at(ia * db + ib, ja * db + jb) = r.at(ia * db + ib, ja * db + jb) + v;
                }
            }
        }
    }
    return r;
}

HomOp super_swap(const GradedSpace& space)
{
    HomOp r(space, 2);
    int N = space.dim();
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            int sign = (space.sigma(i) * space.sigma(j)) % 2 ? -1 : 1;
            // column v_i (x) v_j maps to sign * v_j (x) v_i
            r.at((j - 1) * N + (i - 1), (i - 1) * N + (j - 1)) = RatExpr(sign);
        }
    }
    return r;
}

HomOp super_twist(const HomOp& r)
{
    if (r.arity() != 2) throw std::invalid_argument("super_twist needs arity 2");
    HomOp P = super_swap(r.space());
    return P * r * P;
}

HomOp components_to_homop(const Hom2Components& c)
{
    if (c.empty()) throw std::invalid_argument("empty component list");
    HomOp r(c.front().a.space(), 2);
    for (const auto& s : c) r = r + super_kron(s.a, s.b);
    return r;
}

Hom2Components swap_components(const Hom2Components& c)
{
    Hom2Components r;
    r.reserve(c.size());
    for (const auto& s : c) {
        HomOp a = s.b, b = s.a;
        if (s.parity_a && s.parity_b) a = a.scale(RatExpr(-1));
        r.push_back({std::move(a), std::move(b), s.parity_b, s.parity_a});
    }
    return r;
}

Hom2Components sign_twist(const Hom2Components& c)
{
    Hom2Components r = c;
    for (auto& s : r)
        if (s.parity_a && s.parity_b) s.a = s.a.scale(RatExpr(-1));
    return r;
}

HomOp place_single(const HomOp& a, int parity_a, const GradedSpace& space, int slot)
{
    // triple (X1, X2, X3) with Id elsewhere; Id is even so the Koszul sign
    // only involves the parity of `a` and the column parities before `slot`.
    int N = space.dim();
    HomOp r(space, 3);
    std::vector<int> row(3), col(3);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            const RatExpr& v = a.at(i - 1, j - 1);
            if (v.is_zero()) continue;
            for (int s1 = 1; s1 <= N; ++s1) {
                for (int s2 = 1; s2 <= N; ++s2) {
                    row = {s1, s2, 0};
                    col = {s1, s2, 0};
                    // spectators fill the non-target slots in order
                    std::vector<int> spect = {s1, s2};
                    int si = 0;
                    for (int t = 0; t < 3; ++t) {
                        if (t == slot - 1) {
                            row[t] = i;
                            col[t] = j;
                        } else {
                            row[t] = col[t] = spect[si++];
                        }
                    }
                    int sign_par = 0;
                    if (parity_a % 2) {
                        for (int t = 0; t < slot - 1; ++t) sign_par += space.sigma(col[t]);
                    }
                    RatExpr val = (sign_par % 2) ? -v : v;
                    r.at(r.tuple_index(row), r.tuple_index(col)) = val;
                }
            }
        }
    }
    return r;
}

HomOp place_in_slots(const Hom2Components& c, const GradedSpace& space, int p, int q)
{
    if (p == q || p < 1 || q < 1 || p > 3 || q > 3) throw std::invalid_argument("invalid slots");
    if (p > q) return place_in_slots(swap_components(c), space, q, p);
    int N = space.dim();
    HomOp r(space, 3);
    int spectator = 6 - p - q; // slots sum to 6
    std::vector<int> row(3), col(3);
    for (const auto& s : c) {
        for (int ia = 1; ia <= N; ++ia) {
            for (int ja = 1; ja <= N; ++ja) {
                const RatExpr& av = s.a.at(ia - 1, ja - 1);
                if (av.is_zero()) continue;
                for (int ib = 1; ib <= N; ++ib) {
                    for (int jb = 1; jb <= N; ++jb) {
                        const RatExpr& bv = s.b.at(ib - 1, jb - 1);
                        if (bv.is_zero()) continue;
                        for (int sp = 1; sp <= N; ++sp) {
                            row[p - 1] = ia;
                            col[p - 1] = ja;
                            row[q - 1] = ib;
                            col[q - 1] = jb;
                            row[spectator - 1] = col[spectator - 1] = sp;
                            // (X1(x)X2(x)X3)(v1(x)v2(x)v3) picks up
                            // (-1)^(|X2||v1| + |X3|(|v1|+|v2|))
                            int par2 = (spectator == 2) ? 0 : (p == 2 ? s.parity_a : s.parity_b);
                            int par3 = (spectator == 3) ? 0 : (q == 3 ? s.parity_b : 0);
                            int sgn = par2 * space.sigma(col[0]) +
                                      par3 * (space.sigma(col[0]) + space.sigma(col[1]));
                            RatExpr v = av * bv;
                            if (sgn % 2) v = -v;
                            int ri = r.tuple_index(row), ci = r.tuple_index(col);
                            r.at(ri, ci) = r.at(ri, ci) + v;
                        }
                    }
                }
            }
        }
    }
    return r;
}

} // namespace drmat
