#pragma once

#include "immcoh/rational.hpp"

#include <vector>

namespace immcoh {

using Vec = std::vector<Rational>;

bool is_zero(const Vec& v);

/// A subspace of Q^n kept as a reduced row echelon basis. Insertion order
/// does not affect the stored basis, so ranks and membership tests are
/// independent of the order vectors arrive in.
class RowBasis {
public:
    RowBasis() = default;
    explicit RowBasis(int ambient_dim) : n_(ambient_dim) {}

    int ambient_dim() const { return n_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the basis; the returned vector is zero iff v lies
    /// in the span.
    Vec reduce(Vec v) const;

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    /// Inserts v if independent of the current span. Returns true if the
    /// rank grew.
    bool insert(Vec v);

    const std::vector<Vec>& rows() const { return rows_; }

private:
    int n_ = 0;
    std::vector<Vec> rows_;       // reduced echelon rows, pivot columns increasing
    std::vector<int> pivot_col_;  // pivot column of each row
};

/// Basis of the kernel of the linear map sending the i-th unit vector to
/// rows[i] (an m x n matrix acting on coefficient vectors of length m).
std::vector<Vec> kernel_of_rows(const std::vector<Vec>& rows, int target_dim);

int rank_of_rows(const std::vector<Vec>& rows, int target_dim);

}  // namespace immcoh
