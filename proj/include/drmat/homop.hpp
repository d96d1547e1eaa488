#ifndef DRMAT_HOMOP_HPP
#define DRMAT_HOMOP_HPP

#include "drmat/graded.hpp"
#include "drmat/ratexpr.hpp"

#include <array>

namespace drmat {

/// Dense matrix of RatExpr acting on V^(tensor arity), rows and columns
/// indexed by tuples of basis indices in row-major (first slot most
/// significant) order.
class HomOp {
public:
    HomOp(GradedSpace space, int arity);

    static HomOp identity(const GradedSpace& space, int arity);
    /// E_ij: single entry 1 at (i,j); parity sigma(i)+sigma(j).
    static HomOp basis_E(const GradedSpace& space, int i, int j);

    const GradedSpace& space() const { return space_; }
    int arity() const { return arity_; }
    int dim() const { return dim_; }

    const RatExpr& at(int row, int col) const { return entries_[row * dim_ + col]; }
    RatExpr& at(int row, int col) { return entries_[row * dim_ + col]; }

    int tuple_index(const std::vector<int>& t) const; // 1-based indices
    std::vector<int> index_tuple(int flat) const;
    int tuple_parity(const std::vector<int>& t) const;

    bool is_zero() const;
    bool operator==(const HomOp& o) const;

    HomOp operator+(const HomOp& o) const;
    HomOp operator-(const HomOp& o) const;
    HomOp operator-() const;
    HomOp operator*(const HomOp& o) const; // matrix product
    HomOp scale(const RatExpr& c) const;

    /// First (row, col) tuple pair with nonzero entry, in lex order.
    struct Witness {
        std::vector<int> row, col;
        RatExpr value;
    };
    std::vector<Witness> nonzero_witnesses(std::size_t limit = 8) const;

private:
    GradedSpace space_;
    int arity_;
    int dim_;
    std::vector<RatExpr> entries_;
};

/// Super Kronecker product with the Koszul sign
/// (A (x)_s B)_{(I,K),(J,L)} = (-1)^(par(K)+par(L))*par(J) A_IJ B_KL.
HomOp super_kron(const HomOp& A, const HomOp& B);

/// P_s(v_i (x) v_j) = (-1)^(sigma(i)sigma(j)) v_j (x) v_i.
HomOp super_swap(const GradedSpace& space);

/// T_s(r) = P_s r P_s.
HomOp super_twist(const HomOp& r);

/// Sum of homogeneous a (x) b summands of End(V) (x) End(V).
struct Hom2Summand {
    HomOp a, b;   // arity-1 operators, homogeneous by support
    int parity_a, parity_b;
};
using Hom2Components = std::vector<Hom2Summand>;

HomOp components_to_homop(const Hom2Components& c);

/// Koszul-twisted factor swap: a (x) b -> (-1)^(|a||b|) b (x) a.
Hom2Components swap_components(const Hom2Components& c);
/// Multiply each summand by (-1)^(|a||b|), keeping factor order.
Hom2Components sign_twist(const Hom2Components& c);

/// Embed into the triple tensor product. Ascending slots use the Kronecker
/// formulas; descending slots place the Koszul-twisted swap ascending.
HomOp place_in_slots(const Hom2Components& c, const GradedSpace& space, int p, int q);

/// Embedding of an arity-1 operator with known parity in one slot of three.
HomOp place_single(const HomOp& a, int parity_a, const GradedSpace& space, int slot);

} // namespace drmat

#endif
