#include "immcoh/linalg.hpp"

#include <cassert>

namespace immcoh {

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Vec RowBasis::reduce(Vec v) const
{
    assert(static_cast<int>(v.size()) == n_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational& c = v[pivot_col_[i]];
        if (c != 0) {
            Rational f = c;  // rows are normalised to pivot 1
            for (int j = pivot_col_[i]; j < n_; ++j)
                v[j] -= f * rows_[i][j];
        }
    }
    return v;
}

bool RowBasis::insert(Vec v)
{
    v = reduce(std::move(v));
    int p = -1;
    for (int j = 0; j < n_; ++j) {
        if (v[j] != 0) {
            p = j;
            break;
        }
    }
    if (p < 0)
        return false;
    Rational inv = 1 / v[p];
    for (int j = p; j < n_; ++j)
        v[j] *= inv;
    // back-substitute into existing rows to keep the basis fully reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rational c = rows_[i][p];
        if (c != 0)
            for (int j = p; j < n_; ++j)
                rows_[i][j] -= c * v[j];
    }
    size_t pos = 0;
    while (pos < rows_.size() && pivot_col_[pos] < p)
        ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_col_.insert(pivot_col_.begin() + pos, p);
    return true;
}

std::vector<Vec> kernel_of_rows(const std::vector<Vec>& rows, int target_dim)
{
    // Gaussian elimination on the m x n matrix, remembering the row
    // operations so kernel vectors come out in the original coordinates.
    const int m = static_cast<int>(rows.size());
    const int n = target_dim;
    std::vector<Vec> a = rows;
    std::vector<Vec> ops(m, Vec(m, Rational(0)));  // ops * rows == a
    for (int i = 0; i < m; ++i)
        ops[i][i] = 1;

    std::vector<bool> used(m, false);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = 0; i < m; ++i) {
            if (!used[i] && a[i][col] != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0)
            continue;
        used[piv] = true;
        Rational inv = 1 / a[piv][col];
        for (int j = 0; j < n; ++j)
            a[piv][j] *= inv;
        for (int j = 0; j < m; ++j)
            ops[piv][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == piv)
                continue;
            Rational c = a[i][col];
            if (c == 0)
                continue;
            for (int j = 0; j < n; ++j)
                a[i][j] -= c * a[piv][j];
            for (int j = 0; j < m; ++j)
                ops[i][j] -= c * ops[piv][j];
        }
    }

    std::vector<Vec> kernel;
    for (int i = 0; i < m; ++i)
        if (!used[i] && is_zero(a[i]))
            kernel.push_back(ops[i]);
    return kernel;
}

int rank_of_rows(const std::vector<Vec>& rows, int target_dim)
{
    RowBasis b(target_dim);
    for (const auto& r : rows)
        b.insert(r);
    return b.rank();
}

}  // namespace immcoh
