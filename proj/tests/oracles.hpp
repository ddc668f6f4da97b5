#pragma once

// Brute-force reference computations shared by the unit tests and the
// acceptance run. None of them calls the library's reduction or matching code.

#include "novikov/barcode.hpp"
#include "novikov/matrix.hpp"
#include "novikov/persistence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracle {

using nov::Bar;
using nov::Barcode;
using nov::Exponent;
using nov::ExtExponent;
using nov::Matrix;
using nov::NovikovScalar;

// Determinant of rows `rows` x columns in `mask`, Laplace expansion along the
// first remaining row (no signs in characteristic 2), memoized on the mask.
inline NovikovScalar minor_det(const Matrix& m, const std::vector<size_t>& rows, unsigned mask,
                               std::map<unsigned, NovikovScalar>& memo) {
    if (mask == 0) return NovikovScalar::one();
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const size_t r = rows[rows.size() - static_cast<size_t>(__builtin_popcount(mask))];
    NovikovScalar sum;
    for (size_t j = 0; j < m.cols(); ++j)
        if (mask & (1u << j) && !m(r, j).is_zero()) sum += m(r, j) * minor_det(m, rows, mask & ~(1u << j), memo);
    memo[mask] = sum;
    return sum;
}

// Invariant factors from determinantal divisors: the minimal valuation of the
// k x k minors is beta_1 + ... + beta_k. Exact matrices only (small sizes).
inline std::vector<Exponent> spectral_values_by_minors(const Matrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<Exponent> partial; // partial[k-1] = min valuation of k-minors
    for (size_t k = 1; k <= std::min(rows, cols); ++k) {
        ExtExponent best;
        for (unsigned rmask = 0; rmask < (1u << rows); ++rmask) {
            if (static_cast<size_t>(__builtin_popcount(rmask)) != k) continue;
            std::vector<size_t> rs;
            for (size_t i = 0; i < rows; ++i)
                if (rmask & (1u << i)) rs.push_back(i);
            std::map<unsigned, NovikovScalar> memo;
            for (unsigned cmask = 0; cmask < (1u << cols); ++cmask) {
                if (static_cast<size_t>(__builtin_popcount(cmask)) != k) continue;
                ExtExponent v = minor_det(m, rs, cmask, memo).valuation();
                if (nov::ext_less(v, best)) best = v;
            }
        }
        if (!best) break;
        partial.push_back(*best);
    }
    std::vector<Exponent> values;
    for (size_t k = 0; k < partial.size(); ++k) values.push_back(k ? Exponent(partial[k] - partial[k - 1]) : partial[0]);
    return values;
}

inline ExtExponent max_ext(const ExtExponent& a, const ExtExponent& b) {
    return nov::ext_less(a, b) ? b : a;
}

inline ExtExponent pair_cost(const Bar& a, const Bar& b) {
    if (a.infinite() != b.infinite()) return std::nullopt;
    Exponent c = abs(a.birth - b.birth);
    if (!a.infinite()) c = std::max<Exponent>(c, abs(*a.death() - *b.death()));
    return c;
}

inline ExtExponent drop_cost(const Bar& a) {
    if (a.infinite()) return std::nullopt;
    return Exponent(*a.length / 2);
}

// Minimum over all partial matchings of the maximal cost.
inline ExtExponent exhaustive_bottleneck(const Barcode& b1, const Barcode& b2) {
    const std::vector<Bar> x = b1.expanded(), y = b2.expanded();
    std::vector<bool> used(y.size(), false);
    ExtExponent best;
    bool found = false;
    std::function<void(size_t, ExtExponent)> go = [&](size_t i, ExtExponent cost) {
        if (found && !nov::ext_less(cost, best)) return;
        if (i == x.size()) {
            for (size_t j = 0; j < y.size(); ++j)
                if (!used[j]) cost = max_ext(cost, drop_cost(y[j]));
            if (!found || nov::ext_less(cost, best)) best = cost, found = true;
            return;
        }
        go(i + 1, max_ext(cost, drop_cost(x[i])));
        for (size_t j = 0; j < y.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            go(i + 1, max_ext(cost, pair_cost(x[i], y[j])));
            used[j] = false;
        }
    };
    go(0, Exponent(0));
    return best;
}

// lcm of all endpoint denominators.
inline long common_denominator(const std::vector<const Barcode*>& bs) {
    long q = 1;
    for (const Barcode* b : bs)
        for (const auto& bar : b->bars) {
            q = std::lcm(q, bar.birth.get_den().get_si());
            if (bar.length) q = std::lcm(q, bar.length->get_den().get_si());
        }
    return q;
}

// Minimum of the exhaustive distance over every shift in (1/2q)Z between the
// extreme endpoint differences. The optimum lies on that lattice.
inline std::pair<ExtExponent, Exponent> grid_mod_shift(const Barcode& b1, const Barcode& b2) {
    const long q = common_denominator({&b1, &b2});
    std::vector<Exponent> e1, e2;
    for (const auto& bar : b1.bars) {
        e1.push_back(bar.birth);
        if (bar.length) e1.push_back(*bar.death());
    }
    for (const auto& bar : b2.bars) {
        e2.push_back(bar.birth);
        if (bar.length) e2.push_back(*bar.death());
    }
    Exponent lo = 0, hi = 0;
    for (const auto& a : e1)
        for (const auto& b : e2) lo = std::min<Exponent>(lo, a - b), hi = std::max<Exponent>(hi, a - b);
    ExtExponent best = exhaustive_bottleneck(b1, b2);
    Exponent best_shift = 0;
    const Exponent step = nov::ratio(1, 2 * q);
    for (Exponent c = lo; c <= hi; c += step) {
        ExtExponent d = exhaustive_bottleneck(b1, b2.shifted(c));
        if (nov::ext_less(d, best) || (d == best && abs(c) < abs(best_shift))) best = d, best_shift = c;
    }
    return {best, best_shift};
}

// Endpoints of B_Z = union of the window barcodes translated by j A_M, counted
// in [0, A_M) over a range of j wide enough to reach every endpoint.
struct EndpointCounts {
    size_t assembled = 0, in_window = 0;
};

inline EndpointCounts enumerate_endpoints(const nov::PeriodicBarcode& p) {
    EndpointCounts r;
    const Exponent& a = p.period_action;
    Exponent far = 0;
    for (size_t k = 0; k < p.window.size(); ++k)
        for (const auto& bar : p.window[k].expanded()) {
            // B_0 holds B_k moved down by k kappa; moving keeps the count.
            r.assembled += bar.infinite() ? 1 : 2;
            far = std::max<Exponent>(far, abs(bar.birth));
            if (bar.length) far = std::max<Exponent>(far, abs(*bar.death()));
        }
    const long reach = static_cast<long>(nov::ceil_rational(far / a).get_num().get_si()) + 2;
    for (const auto& b : p.window)
        for (const auto& bar : b.expanded())
            for (long j = -reach; j <= reach; ++j) {
                const Exponent t = a * Exponent(j);
                auto inside = [&](const Exponent& e) { return e + t >= 0 && e + t < a; };
                if (inside(bar.birth)) ++r.in_window;
                if (bar.length && inside(*bar.death())) ++r.in_window;
            }
    return r;
}

} // namespace oracle
