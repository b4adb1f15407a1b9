#include "immcoh/qseries.hpp"

#include <sstream>

namespace immcoh {

BiSeries::BiSeries(int order_q, int order_x) : nq_(order_q), nx_(order_x)
{
    if (order_q < 0 || order_x < 0)
        throw ValidationError("series orders must be >= 0");
    c_.assign(static_cast<size_t>(nq_ + 1) * (nx_ + 1), Integer(0));
}

size_t BiSeries::idx(int i, int j) const
{
    if (i < 0 || i > nq_ || j < 0 || j > nx_)
        throw ValidationError("coefficient index out of range");
    return static_cast<size_t>(i) * (nx_ + 1) + j;
}

BiSeries BiSeries::one(int order_q, int order_x)
{
    BiSeries s(order_q, order_x);
    s.set(0, 0, 1);
    return s;
}

BiSeries BiSeries::monomial(int order_q, int order_x, int i, int j, const Integer& c)
{
    BiSeries s(order_q, order_x);
    if (i <= order_q && j <= order_x)
        s.set(i, j, c);
    return s;
}

static void check_orders(const BiSeries& a, const BiSeries& b)
{
    if (a.order_q() != b.order_q() || a.order_x() != b.order_x())
        throw ValidationError("series order mismatch");
}

BiSeries BiSeries::operator+(const BiSeries& o) const
{
    check_orders(*this, o);
    BiSeries r(nq_, nx_);
    for (size_t k = 0; k < c_.size(); ++k)
        r.c_[k] = c_[k] + o.c_[k];
    return r;
}

BiSeries BiSeries::operator*(const BiSeries& o) const
{
    check_orders(*this, o);
    BiSeries r(nq_, nx_);
    for (int i = 0; i <= nq_; ++i) {
        for (int j = 0; j <= nx_; ++j) {
            const Integer& a = at(i, j);
            if (a == 0)
                continue;
            for (int i2 = 0; i + i2 <= nq_; ++i2)
                for (int j2 = 0; j + j2 <= nx_; ++j2) {
                    const Integer& b = o.at(i2, j2);
                    if (b != 0)
                        r.c_[r.idx(i + i2, j + j2)] += a * b;
                }
        }
    }
    return r;
}

bool BiSeries::operator==(const BiSeries& o) const
{
    return nq_ == o.nq_ && nx_ == o.nx_ && c_ == o.c_;
}

BiSeries BiSeries::times_geometric_q(int d) const
{
    if (d <= 0)
        throw ValidationError("geometric factor needs q-degree >= 1");
    // coefficientwise prefix sums along q in steps of d
    BiSeries r = *this;
    for (int i = d; i <= nq_; ++i)
        for (int j = 0; j <= nx_; ++j)
            r.c_[r.idx(i, j)] += r.at(i - d, j);
    return r;
}

std::optional<std::pair<int, int>> BiSeries::first_mismatch(const BiSeries& a, const BiSeries& b)
{
    check_orders(a, b);
    for (int i = 0; i <= a.order_q(); ++i)
        for (int j = 0; j <= a.order_x(); ++j)
            if (a.at(i, j) != b.at(i, j))
                return std::make_pair(i, j);
    return std::nullopt;
}

BiSeries pochhammer_product(int order_q, int order_x)
{
    BiSeries p = BiSeries::one(order_q, order_x);
    for (int k = 1; k <= order_q; ++k) {
        BiSeries factor = BiSeries::one(order_q, order_x) + BiSeries::monomial(order_q, order_x, k, 1);
        p = p * factor;
    }
    return p;
}

BiSeries pochhammer_sum(int order_q, int order_x)
{
    BiSeries s(order_q, order_x);
    for (int k = 0; k <= order_x; ++k) {
        const long long qexp = static_cast<long long>(k) * (k - 1) / 2 + k;
        if (qexp > order_q)
            break;  // the whole term truncates away, as do all later ones
        BiSeries term = BiSeries::monomial(order_q, order_x, static_cast<int>(qexp), k);
        for (int j = 1; j <= k; ++j)
            term = term.times_geometric_q(j);
        s = s + term;
    }
    return s;
}

std::string IdentityReport::to_json() const
{
    std::ostringstream os;
    os << "{\"identity\": \"" << identity << "\", \"orders\": [" << order_a << ", " << order_b
       << "], \"holds\": " << (holds ? "true" : "false") << ", \"first_mismatch\": ";
    if (first_mismatch)
        os << "[" << first_mismatch->first << ", " << first_mismatch->second << "]";
    else
        os << "null";
    os << "}";
    return os.str();
}

IdentityReport footnote_identity_check(int order_q, int order_x)
{
    IdentityReport r;
    r.identity = "q-pochhammer";
    r.order_a = order_q;
    r.order_b = order_x;
    r.first_mismatch = BiSeries::first_mismatch(pochhammer_sum(order_q, order_x),
                                                pochhammer_product(order_q, order_x));
    r.holds = !r.first_mismatch.has_value();
    return r;
}

BiSeries looijenga_module_ranks(int order_t, int order_u)
{
    BiSeries s(order_t, order_u);
    for (int k = 0; k <= order_u; ++k) {
        const long long texp = static_cast<long long>(k) * (k + 2);
        if (texp > order_t)
            break;
        BiSeries term = BiSeries::monomial(order_t, order_u, static_cast<int>(texp), k);
        for (int j = 1; j <= k; ++j)
            term = term.times_geometric_q(2 * j);
        s = s + term;
    }
    return s;
}

BiSeries exterior_generator_ranks(int order_t, int order_u)
{
    BiSeries p = BiSeries::one(order_t, order_u);
    for (int i = 1; 2 * i + 1 <= order_t; ++i) {
        BiSeries factor =
            BiSeries::one(order_t, order_u) + BiSeries::monomial(order_t, order_u, 2 * i + 1, 1);
        p = p * factor;
    }
    return p;
}

IdentityReport looijenga_rank_check(int order_t, int order_u)
{
    IdentityReport r;
    r.identity = "looijenga-module-ranks";
    r.order_a = order_t;
    r.order_b = order_u;
    r.first_mismatch = BiSeries::first_mismatch(looijenga_module_ranks(order_t, order_u),
                                                exterior_generator_ranks(order_t, order_u));
    r.holds = !r.first_mismatch.has_value();
    return r;
}

}  // namespace immcoh
