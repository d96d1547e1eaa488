#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drmat/constructors.hpp"

#include <random>

using namespace drmat;

namespace {

// homogeneous parity of E_ij
int epar(const GradedSpace& s, int i, int j) { return (s.sigma(i) + s.sigma(j)) % 2; }

// unsigned Kronecker product (classical gl(N)) for the n = 0 degeneration
HomOp plain_kron(const HomOp& A, const HomOp& B)
{
    int da = A.dim(), db = B.dim();
    HomOp out(A.space(), A.arity() + B.arity());
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    out.at(i * db + k, j * db + l) = A.at(i, j) * B.at(k, l);
    return out;
}

} // namespace

TEST_CASE("basis_E")
{
    GradedSpace s(1, 1);
    HomOp e11 = HomOp::basis_E(s, 1, 1);
    CHECK(e11.at(0, 0) == RatExpr(1));
    CHECK(e11.at(1, 1) == RatExpr(0));
    CHECK(epar(s, 1, 1) == 0);
    CHECK(epar(s, 1, 2) == 1);
    CHECK_THROWS_AS(HomOp::basis_E(s, 0, 1), std::out_of_range);

    // E_ij E_kl = delta_jk E_il, brute force at N = 3
    GradedSpace s3(2, 1);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    HomOp prod = HomOp::basis_E(s3, i, j) * HomOp::basis_E(s3, k, l);
                    HomOp expect =
                        j == k ? HomOp::basis_E(s3, i, l) : HomOp(s3, 1);
                    CHECK(prod == expect);
                }
}

TEST_CASE("super_kron entry signs")
{
    GradedSpace s(1, 1);
    // even factors: no sign
    HomOp k1 = super_kron(HomOp::basis_E(s, 1, 1), HomOp::basis_E(s, 2, 2));
    CHECK(k1.at(0 * 2 + 1, 0 * 2 + 1) == RatExpr(1)); // v1(x)v2 -> v1(x)v2

    // odd factors acting on v1 (x) v2: sign (-1)^((sigma(1)+sigma(2))*sigma(1)) = +1
    HomOp k2 = super_kron(HomOp::basis_E(s, 2, 1), HomOp::basis_E(s, 1, 2));
    CHECK(k2.at(1 * 2 + 0, 0 * 2 + 1) == RatExpr(1)); // v1(x)v2 -> +v2(x)v1

    // hand-expansion of the entry formula on every basis pair
    GradedSpace s3(1, 2);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    HomOp kk = super_kron(HomOp::basis_E(s3, i, j), HomOp::basis_E(s3, k, l));
                    int row = (i - 1) * 3 + (k - 1), col = (j - 1) * 3 + (l - 1);
                    int sgn = ((s3.sigma(k) + s3.sigma(l)) * s3.sigma(j)) % 2 ? -1 : 1;
                    CHECK(kk.at(row, col) == RatExpr(sgn));
                }
}

TEST_CASE("super_kron mixed product rule")
{
    // (A (x)s B)(C (x)s D) = (-1)^(|B||C|) (AC (x)s BD), homogeneous basis ops
    for (GradedSpace s : {GradedSpace(1, 1), GradedSpace(1, 2), GradedSpace(2, 1)}) {
        int N = s.dim();
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> d(1, N);
        for (int trial = 0; trial < 60; ++trial) {
            int ia = d(rng), ja = d(rng), ib = d(rng), jb = d(rng);
            int ic = d(rng), jc = d(rng), id = d(rng), jd = d(rng);
            HomOp A = HomOp::basis_E(s, ia, ja), B = HomOp::basis_E(s, ib, jb);
            HomOp C = HomOp::basis_E(s, ic, jc), D = HomOp::basis_E(s, id, jd);
            HomOp lhs = super_kron(A, B) * super_kron(C, D);
            HomOp rhs = super_kron(A * C, B * D);
            if ((epar(s, ib, jb) * epar(s, ic, jc)) % 2) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("super_swap")
{
    CHECK(super_swap(GradedSpace(2, 0)).at(0 * 2 + 1, 1 * 2 + 0) == RatExpr(1));
    CHECK(super_swap(GradedSpace(0, 2)).at(1 * 2 + 0, 0 * 2 + 1) == RatExpr(-1));
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n >= 1 && n <= 4 - m; ++n) {
            if (m + n < 1 || m + n > 4) continue;
            GradedSpace s(m, n);
            HomOp P = super_swap(s);
            CHECK(P * P == HomOp::identity(s, 2));
        }
}

TEST_CASE("super_twist")
{
    GradedSpace s(1, 2);
    CHECK(super_twist(HomOp::identity(s, 2)) == HomOp::identity(s, 2));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l) {
                    HomOp ab = super_kron(HomOp::basis_E(s, i, j), HomOp::basis_E(s, k, l));
                    HomOp ba = super_kron(HomOp::basis_E(s, k, l), HomOp::basis_E(s, i, j));
                    if ((epar(s, i, j) * epar(s, k, l)) % 2) ba = -ba;
                    CHECK(super_twist(ab) == ba);          // T_s(a(x)b) = (-1)^(|a||b|) b(x)a
                    CHECK(super_twist(super_twist(ab)) == ab); // involution
                }
}

TEST_CASE("place_in_slots")
{
    GradedSpace s(1, 1);
    Hom2Components id2{{HomOp::identity(s, 1), HomOp::identity(s, 1), 0, 0}};
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {1, 3}, {3, 1}, {2, 1}, {3, 2}})
        CHECK(place_in_slots(id2, s, p, q) == HomOp::identity(s, 3));

    // descending slots = Koszul-twisted swap placed ascending
    ZeroWeightOp r = r_rat(s, IntervalPartition(2, {{1, 2}}));
    Hom2Components c = r.to_components();
    CHECK(place_in_slots(c, s, 3, 1) == place_in_slots(swap_components(c), s, 1, 3));

    // component formula vs conjugation formula for r^(13)
    for (GradedSpace sp : {GradedSpace(1, 1), GradedSpace(2, 1)}) {
        int N = sp.dim();
        IntervalPartition X(N, {{1, N}});
        Hom2Components cc = r_rat(sp, X).to_components();
        HomOp via_components = place_in_slots(cc, sp, 1, 3);
        HomOp idp = super_kron(HomOp::identity(sp, 1), super_swap(sp));
        HomOp via_conj = idp * place_in_slots(cc, sp, 1, 2) * idp;
        CHECK(via_components == via_conj);
    }
}

TEST_CASE("alt_s_of_dr")
{
    // constant r has vanishing differential
    GradedSpace s(1, 1);
    ZeroWeightOp constant(s);
    constant.alpha(1, 2) = RatExpr(5);
    constant.beta(1, 2) = RatExpr(-3);
    CHECK(alt_s_of_dr(constant).is_zero());

    // rewrite route agrees with the direct super-symmetrizer definition
    for (GradedSpace sp : {GradedSpace(1, 1), GradedSpace(2, 1), GradedSpace(1, 2)}) {
        int N = sp.dim();
        ZeroWeightOp r = r_rat(sp, IntervalPartition(N, {{1, N}}));
        CHECK(alt_s_of_dr(r) == alt_s_of_dr_direct(r));
    }

    // n = 0 degeneration: matches an unsigned reimplementation
    GradedSpace ev(3, 0);
    ZeroWeightOp r = r_rat(ev, IntervalPartition(3, {{1, 3}}));
    HomOp graded = alt_s_of_dr(r);
    HomOp plain(ev, 3);
    for (int k = 1; k <= 3; ++k) {
        HomOp x = HomOp::basis_E(ev, k, k);
        HomOp id1 = HomOp::identity(ev, 1);
        for (const auto& sm : r.derivative_l(k).to_components()) {
            plain = plain + plain_kron(plain_kron(x, sm.a), sm.b);
            plain = plain + plain_kron(plain_kron(sm.a, sm.b), x);
            plain = plain + plain_kron(plain_kron(sm.b, x), sm.a);
        }
        (void)id1;
    }
    CHECK(graded == plain);
}

TEST_CASE("associativity and parity preservation")
{
    GradedSpace s(1, 1);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        HomOp A = super_kron(HomOp::basis_E(s, d(rng), d(rng)), HomOp::basis_E(s, d(rng), d(rng)));
        HomOp B = super_kron(HomOp::basis_E(s, d(rng), d(rng)), HomOp::basis_E(s, d(rng), d(rng)));
        HomOp C = super_kron(HomOp::basis_E(s, d(rng), d(rng)), HomOp::basis_E(s, d(rng), d(rng)));
        CHECK((A * B) * C == A * (B * C));
        CHECK(A * HomOp::identity(s, 2) == A);
    }

    // zero-weight operators preserve the parity grading of basis tuples
    GradedSpace s3(2, 1);
    HomOp M = r_rat(s3, IntervalPartition(3, {{1, 3}})).to_homop();
    for (int row = 0; row < M.dim(); ++row)
        for (int col = 0; col < M.dim(); ++col)
            if (!M.at(row, col).is_zero())
                CHECK(M.tuple_parity(M.index_tuple(row)) ==
                      M.tuple_parity(M.index_tuple(col)));
}
