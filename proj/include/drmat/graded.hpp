#ifndef DRMAT_GRADED_HPP
#define DRMAT_GRADED_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace drmat {

/// gl(m,n)-type graded space: basis v_1..v_N with parity sigma(i).
/// The standard layout puts the m even indices first; permutation gauges
/// may relabel, so the parity table is stored explicitly.
class GradedSpace {
public:
    GradedSpace(int m, int n) : m_(m), n_(n)
    {
        if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("bad dimensions");
        sigma_.assign(m + n, 0);
        for (int i = m; i < m + n; ++i) sigma_[i] = 1;
    }

    explicit GradedSpace(std::vector<int> sigma) : sigma_(std::move(sigma))
    {
        if (sigma_.empty()) throw std::invalid_argument("bad dimensions");
        n_ = std::accumulate(sigma_.begin(), sigma_.end(), 0);
        m_ = static_cast<int>(sigma_.size()) - n_;
    }

    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return static_cast<int>(sigma_.size()); }

    /// parity of basis index i (1-based)
    int sigma(int i) const { return sigma_.at(i - 1); }
    const std::vector<int>& parities() const { return sigma_; }

    /// A_ij sign table: (-1)^(sigma(i)+sigma(j)) for i < j, 1 for i > j.
    int sign_A(int i, int j) const
    {
        if (i < j) return (sigma(i) + sigma(j)) % 2 ? -1 : 1;
        return 1;
    }

    bool operator==(const GradedSpace& o) const { return sigma_ == o.sigma_; }
    bool operator!=(const GradedSpace& o) const { return !(*this == o); }

private:
    int m_, n_;
    std::vector<int> sigma_;
};

} // namespace drmat

#endif
