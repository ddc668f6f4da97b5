#include "novikov/persistence.hpp"

#include "novikov/errors.hpp"

#include <algorithm>

namespace nov {

ExtExponent match_cost(const Bar& a, const Bar& b) {
    if (a.infinite() != b.infinite()) return std::nullopt;
    Exponent cost = abs(a.birth - b.birth);
    if (!a.infinite()) cost = std::max(cost, Exponent(abs(*a.death() - *b.death())));
    return cost;
}

ExtExponent deletion_cost(const Bar& a) {
    if (a.infinite()) return std::nullopt;
    return Exponent(*a.length / 2);
}

bool is_delta_matching(const std::vector<Bar>& b1, const std::vector<Bar>& b2, const Matching& m,
                       const Exponent& delta) {
    std::vector<int> seen1(b1.size()), seen2(b2.size());
    for (auto [i, j] : m.pairs) {
        if (i >= b1.size() || j >= b2.size()) return false;
        ++seen1[i];
        ++seen2[j];
        auto c = match_cost(b1[i], b2[j]);
        if (!c || *c > delta) return false;
    }
    for (size_t i : m.unmatched1) {
        if (i >= b1.size()) return false;
        ++seen1[i];
        auto c = deletion_cost(b1[i]);
        if (!c || *c > delta) return false;
    }
    for (size_t j : m.unmatched2) {
        if (j >= b2.size()) return false;
        ++seen2[j];
        auto c = deletion_cost(b2[j]);
        if (!c || *c > delta) return false;
    }
    auto once = [](int k) { return k == 1; };
    return std::all_of(seen1.begin(), seen1.end(), once) && std::all_of(seen2.begin(), seen2.end(), once);
}

namespace {

// Bipartite graph of bars plus diagonal copies. Left: bars of b1, then the
// diagonal copies of b2's bars. Right: bars of b2, then diagonal copies of b1's.
struct MatchGraph {
    const std::vector<Bar>& b1;
    const std::vector<Bar>& b2;

    bool edge(size_t l, size_t r, const Exponent& delta) const {
        const size_t n1 = b1.size(), n2 = b2.size();
        if (l < n1 && r < n2) {
            auto c = match_cost(b1[l], b2[r]);
            return c && *c <= delta;
        }
        if (l < n1) {
            if (r - n2 != l) return false;
            auto c = deletion_cost(b1[l]);
            return c && *c <= delta;
        }
        if (r < n2) {
            if (l - n1 != r) return false;
            auto c = deletion_cost(b2[r]);
            return c && *c <= delta;
        }
        return true;
    }

    // Kuhn's augmenting paths; returns the partner of each left node or nothing.
    std::optional<std::vector<size_t>> perfect(const Exponent& delta) const {
        const size_t n = b1.size() + b2.size();
        std::vector<size_t> right_of(n, n), left_of(n, n);
        std::vector<char> visited;
        std::vector<std::vector<size_t>> adj(n);
        for (size_t l = 0; l < n; ++l)
            for (size_t r = 0; r < n; ++r)
                if (edge(l, r, delta)) adj[l].push_back(r);
        auto augment = [&](auto&& self, size_t l) -> bool {
            for (size_t r : adj[l]) {
                if (visited[r]) continue;
                visited[r] = 1;
                if (left_of[r] == n || self(self, left_of[r])) {
                    left_of[r] = l;
                    right_of[l] = r;
                    return true;
                }
            }
            return false;
        };
        for (size_t l = 0; l < n; ++l) {
            visited.assign(n, 0);
            if (!augment(augment, l)) return std::nullopt;
        }
        return right_of;
    }
};

Matching extract(const MatchGraph& g, const std::vector<size_t>& right_of, const Exponent& delta) {
    Matching m;
    m.delta = delta;
    const size_t n1 = g.b1.size(), n2 = g.b2.size();
    for (size_t l = 0; l < n1; ++l) {
        if (right_of[l] < n2)
            m.pairs.emplace_back(l, right_of[l]);
        else
            m.unmatched1.push_back(l);
    }
    for (size_t j = 0; j < n2; ++j)
        if (right_of[n1 + j] == j) m.unmatched2.push_back(j);
    return m;
}

std::vector<Exponent> endpoints(const std::vector<Bar>& bars) {
    std::vector<Exponent> e;
    for (const auto& b : bars) {
        e.push_back(b.birth);
        if (!b.infinite()) e.push_back(*b.death());
    }
    return e;
}

void sort_unique(std::vector<Exponent>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

BottleneckResult bottleneck(const Barcode& b1, const Barcode& b2) {
    const std::vector<Bar> e1 = b1.expanded(), e2 = b2.expanded();
    BottleneckResult res;
    std::vector<Exponent> cand{0};
    for (const auto& x : e1) {
        if (auto c = deletion_cost(x)) cand.push_back(*c);
        for (const auto& y : e2)
            if (auto c = match_cost(x, y)) cand.push_back(*c);
    }
    for (const auto& y : e2)
        if (auto c = deletion_cost(y)) cand.push_back(*c);
    sort_unique(cand);

    MatchGraph g{e1, e2};
    auto top = g.perfect(cand.back());
    if (!top) {
        // Only a mismatch in infinite bars can block every delta.
        res.matching.delta = std::nullopt;
        return res;
    }
    size_t lo = 0, hi = cand.size() - 1;
    std::vector<size_t> best = *top;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (auto p = g.perfect(cand[mid])) {
            hi = mid;
            best = *p;
        } else {
            lo = mid + 1;
        }
    }
    res.distance = cand[lo];
    res.matching = extract(g, best, cand[lo]);
    return res;
}

namespace {

ShiftResult best_over(const Barcode& b1, const Barcode& b2, const std::vector<Exponent>& shifts) {
    ShiftResult best;
    bool have = false;
    for (const auto& c : shifts) {
        BottleneckResult r = bottleneck(b1, b2.shifted(c));
        // Ties go to the shift closest to 0.
        bool better = !have || (r.distance && (!best.distance || *r.distance < *best.distance ||
                                               (*r.distance == *best.distance && abs(c) < abs(best.shift))));
        if (better) {
            best.distance = r.distance;
            best.shift = c;
            best.matching = r.matching;
            have = true;
        }
    }
    best.candidates = shifts.size();
    return best;
}

} // namespace

ShiftResult bottleneck_mod_shift(const Barcode& b1, const Barcode& b2) {
    const std::vector<Exponent> p1 = endpoints(b1.expanded()), p2 = endpoints(b2.expanded());
    std::vector<Exponent> diffs;
    for (const auto& x : p1)
        for (const auto& y : p2) diffs.push_back(x - y);
    sort_unique(diffs);
    std::vector<Exponent> shifts = diffs;
    for (size_t i = 0; i < diffs.size(); ++i)
        for (size_t j = i + 1; j < diffs.size(); ++j) shifts.push_back((diffs[i] + diffs[j]) / 2);
    shifts.push_back(0);
    sort_unique(shifts);
    return best_over(b1, b2, shifts);
}

ShiftResult bottleneck_mod_shift_grid(const Barcode& b1, const Barcode& b2, const Exponent& lo,
                                      const Exponent& hi, size_t steps) {
    std::vector<Exponent> shifts;
    if (steps == 0) {
        shifts.push_back(lo);
    } else {
        for (size_t k = 0; k <= steps; ++k)
            shifts.push_back(lo + (hi - lo) * Exponent(static_cast<long>(k)) / Exponent(static_cast<long>(steps)));
    }
    return best_over(b1, b2, shifts);
}

std::vector<ExtExponent> length_multiset(const Barcode& b) {
    std::vector<ExtExponent> r;
    for (const auto& bar : b.expanded()) r.push_back(bar.length);
    std::sort(r.begin(), r.end(), ext_less);
    return r;
}

Barcode assemble_window(const PeriodicBarcode& p) {
    Barcode r;
    for (size_t k = 0; k < p.window.size(); ++k) {
        Barcode s = p.window[k].shifted(-p.kappa * Exponent(static_cast<long>(k)));
        r.bars.insert(r.bars.end(), s.bars.begin(), s.bars.end());
    }
    r.normalize();
    return r;
}

EndpointReport lsv_endpoint_count(const PeriodicBarcode& p) {
    const Exponent& a = p.period_action;
    if (a <= 0) throw HypothesisFailure("period action must be positive");
    if (p.window.size() != p.period_index)
        throw HypothesisFailure("window has " + std::to_string(p.window.size()) + " degrees, expected " +
                                std::to_string(p.period_index));
    EndpointReport rep;
    Barcode b0 = assemble_window(p);
    for (const auto& bar : b0.expanded()) rep.total += bar.infinite() ? 1 : 2;

    // Shifts j with e + j A in [0, A).
    auto hits = [&](const Exponent& e) {
        mpz_class lo = ceil_rational(-e / a).get_num(), hi = ceil_rational((a - e) / a).get_num();
        return static_cast<size_t>(mpz_class(hi - lo).get_ui());
    };
    // The unique j with e + j A in [0, A).
    auto into = [&](const Exponent& e) -> Exponent { return Exponent(ceil_rational(-e / a)) * a; };

    for (const auto& bk : p.window)
        for (const auto& bar : bk.expanded()) {
            rep.in_window += hits(bar.birth);
            if (bar.infinite()) {
                ++rep.lower_reps_lower;
                continue;
            }
            const Exponent death = *bar.death();
            rep.in_window += hits(death);
            ++rep.lower_reps_lower;
            ++rep.lower_reps_upper;
            ++rep.upper_reps_lower;
            ++rep.upper_reps_upper;
            // Representative with the lower end in the window; is the upper end there too?
            if (death + into(bar.birth) >= a) ++rep.leaving;
            // Representative with the upper end in the window; is the lower end there too?
            if (bar.birth + into(death) < 0) ++rep.entering;
            if (*bar.length >= a) ++rep.long_orbits;
        }

    auto check = [](bool ok, const std::string& what) {
        if (!ok) throw AssertionFailure("endpoint count: " + what);
    };
    check(rep.lower_reps_upper + rep.lower_reps_lower == rep.total, "X(B_0) != X(B-)");
    check(rep.upper_reps_upper == rep.upper_reps_lower, "B+ contains an infinite bar");
    check(rep.leaving == rep.entering, "X+(B- minus B+) != X-(B+ minus B-)");
    check(rep.upper_reps_upper + rep.lower_reps_lower == rep.in_window, "X != X+(B+) + X-(B-)");
    check(rep.total == rep.in_window, "X(B_0) = " + std::to_string(rep.total) + " but " +
                                          std::to_string(rep.in_window) + " endpoints lie in the window");
    return rep;
}

} // namespace nov
