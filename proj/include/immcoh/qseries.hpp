#pragma once

#include "immcoh/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace immcoh {

/// Two-variable truncated power series with exact integer coefficients,
/// indexed by (q-degree i <= order_q, x-degree j <= order_x).
class BiSeries {
public:
    BiSeries(int order_q, int order_x);

    static BiSeries one(int order_q, int order_x);
    static BiSeries monomial(int order_q, int order_x, int i, int j, const Integer& c = 1);

    int order_q() const { return nq_; }
    int order_x() const { return nx_; }

    const Integer& at(int i, int j) const { return c_[idx(i, j)]; }
    void set(int i, int j, const Integer& v) { c_[idx(i, j)] = v; }

    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator*(const BiSeries& o) const;
    bool operator==(const BiSeries& o) const;

    /// Multiply by 1/(1-q^d), expanded as the geometric series in q.
    BiSeries times_geometric_q(int d) const;

    /// First (i, j) in lexicographic scan order where the two series
    /// differ, or nullopt when equal.
    static std::optional<std::pair<int, int>> first_mismatch(const BiSeries& a, const BiSeries& b);

private:
    size_t idx(int i, int j) const;
    int nq_, nx_;
    std::vector<Integer> c_;
};

/// Truncation of prod_{k>=1} (1 + q^k x).
BiSeries pochhammer_product(int order_q, int order_x);

/// Truncation of sum_{k>=0} q^{k(k-1)/2} q^k x^k / ((1-q)...(1-q^k)).
BiSeries pochhammer_sum(int order_q, int order_x);

struct IdentityReport {
    std::string identity;
    int order_a = 0;
    int order_b = 0;
    bool holds = false;
    std::optional<std::pair<int, int>> first_mismatch;

    std::string to_json() const;
};

/// Coefficientwise equality of the two q-Pochhammer expansions up to the
/// given orders.
IdentityReport footnote_identity_check(int order_q, int order_x);

/// Equality of the two rank generating functions for the stable
/// cohomology of the mapping class group with symmetric-power
/// coefficients: sum_s u^s t^{s(s+2)} prod_{j<=s} (1-t^{2j})^{-1} against
/// prod_{i>=1} (1 + u t^{2i+1}). Both sides are expanded directly; the
/// substitution q = t^2, x = u t turns this into the footnote identity.
IdentityReport looijenga_rank_check(int order_t, int order_u);

/// Left side of looijenga_rank_check (one generator per monomial of
/// Q[x_2,...,x_{2s}], degree-shifted by s(s+2)).
BiSeries looijenga_module_ranks(int order_t, int order_u);

/// Right side: exterior generators l_{2i+1} of bidegree (2i+1, 1).
BiSeries exterior_generator_ranks(int order_t, int order_u);

}  // namespace immcoh
