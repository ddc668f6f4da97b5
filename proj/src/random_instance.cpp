#include "novikov/instance.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nov {

namespace {

// Bounded draws through % keep the streams identical across standard libraries.
struct Draw {
    std::mt19937_64 rng;
    int q = 1;

    explicit Draw(uint64_t seed) : rng(seed) {}
    uint64_t below(uint64_t n) { return n ? rng() % n : 0; }
    bool coin(uint64_t num, uint64_t den) { return below(den) < num; }
    // k/q with k in [lo*q, hi*q].
    Exponent grid(const Exponent& lo, const Exponent& hi) {
        mpz_class a = ceil_rational(lo * q).get_num(), b = floor_rational(hi * q).get_num();
        if (b < a) b = a;
        mpz_class span = b - a + 1;
        Exponent e(a + mpz_class(static_cast<unsigned long>(below(span.get_ui()))), q);
        e.canonicalize();
        return e;
    }
    // Polynomial with one or two terms, lowest term at or above lo.
    NovikovScalar poly(const Exponent& lo, const Exponent& width = 2) {
        std::vector<Exponent> t{grid(lo, lo + width)};
        if (coin(1, 3)) t.push_back(grid(lo, lo + width + 1));
        NovikovScalar s = NovikovScalar::from_terms(t);
        return s.is_zero() ? NovikovScalar::monomial(t.front()) : s;
    }
};

Exponent max_degree(const Matrix& m) {
    Exponent best = 0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) best = std::max(best, m(i, j).terms().back());
    return best;
}

// x -> E x E for E = I + lambda e_ij (i != j), which is its own inverse in characteristic 2.
void conjugate(Matrix& x, size_t i, size_t j, const NovikovScalar& lambda) {
    const size_t n = x.rows();
    for (size_t k = 0; k < n; ++k)
        if (!x(j, k).is_exact_zero()) x(i, k) += lambda * x(j, k);
    for (size_t k = 0; k < n; ++k)
        if (!x(k, i).is_exact_zero()) x(k, j) += x(k, i) * lambda;
}

Matrix truncate_nonzero(const Matrix& m, const Exponent& p) {
    return m.map([&](const NovikovScalar& s) { return s.is_exact_zero() ? s : s.truncated(p); });
}

} // namespace

RandomInstance random_instance(uint64_t seed, const InstanceOptions& opt) {
    Draw g(seed);
    RandomInstance inst;
    inst.seed = seed;
    g.q = 1 + static_cast<int>(g.below(opt.max_denominator));
    inst.which = opt.which ? *opt.which : (g.coin(1, 2) ? DeformationCase::Low : DeformationCase::High);
    const bool high = inst.which == DeformationCase::High;

    const size_t n = opt.max_dim ? 1 + g.below(opt.max_dim) : 0;
    const size_t k = g.below(n / 2 + 1), b = n - 2 * k;
    inst.a = g.grid(ratio(1, g.q), 3);
    inst.big_a = inst.a + g.grid(ratio(1, g.q), 3);
    const Exponent& a = inst.a;
    const Exponent& big_a = inst.big_a;

    // Roles in a random slot order: xi_0..xi_{b-1}, then (zeta_j, eta_j).
    std::vector<size_t> slot(n);
    std::iota(slot.begin(), slot.end(), 0);
    for (size_t i = n; i > 1; --i) std::swap(slot[i - 1], slot[g.below(i)]);
    auto xi = [&](size_t j) { return slot[j]; };
    auto zeta = [&](size_t j) { return slot[b + 2 * j]; };
    auto eta = [&](size_t j) { return slot[b + 2 * j + 1]; };

    Matrix d0(n, n), m(n, n), d_h(n, n), n_h(n, n), h(n, n);
    for (size_t j = 0; j < k; ++j) {
        // Case 2 needs every bar shorter than a.
        Exponent beta = high ? g.grid(ratio(1, g.q), a - ratio(1, g.q)) : g.grid(ratio(1, g.q), 4);
        if (beta <= 0 || (high && beta >= a)) beta = a / 2;
        d0(eta(j), zeta(j)) = NovikovScalar::monomial(beta);
    }

    // Optional xi_src -> T^gamma xi_tgt pairing; it changes dim H, so Case 1 only.
    std::optional<std::pair<size_t, size_t>> pairing;
    if (!high && b >= 2 && g.coin(1, 3)) {
        size_t s = g.below(b), t = g.below(b - 1);
        if (t >= s) ++t;
        pairing = {s, t};
        m(xi(t), xi(s)) = g.poly(a);
    }
    std::vector<char> xi_hit(b, 0);
    if (pairing) xi_hit[pairing->first] = xi_hit[pairing->second] = 1;
    for (size_t j = 0; j < k; ++j) {
        for (size_t l = 0; l < k; ++l)
            if (g.coin(1, 2)) m(eta(l), zeta(j)) = g.poly(a);
        for (size_t l = 0; l < b; ++l) {
            if (pairing && l == pairing->first) continue;
            if (g.coin(1, 2)) {
                m(xi(l), zeta(j)) = g.poly(a);
                xi_hit[l] = 1;
            }
        }
    }
    for (size_t r = 0; r < b; ++r)
        for (size_t c = 0; c < b; ++c) {
            if (g.coin(1, 3)) n_h(xi(r), xi(c)) = g.poly(big_a);
            if (pairing && r == pairing->first) continue;
            if (xi_hit[c]) continue;
            if (g.coin(1, 2)) d_h(xi(r), xi(c)) = g.poly(0);
        }
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c)
            if (g.coin(1, 4)) h(r, c) = g.poly(big_a - a);

    Matrix d = d0 + m;
    Matrix map = d_h + d * h + h * d;
    Matrix map0 = d_h + n_h + d0 * h + h * d0;
    // Spectral values of [D] stay below B * (largest degree of D_h).
    const Exponent margin = Exponent(static_cast<long>(b)) * max_degree(d_h + n_h) + 5;

    const size_t ops = n ? n + g.below(n + 1) : 0;
    for (size_t t = 0; t < ops && n >= 2; ++t) {
        size_t i = g.below(n), j = g.below(n - 1);
        if (j >= i) ++j;
        NovikovScalar lambda = g.coin(1, 2) ? NovikovScalar::one() : g.poly(0, 1);
        for (Matrix* x : {&d0, &d, &map0, &map}) conjugate(*x, i, j, lambda);
    }

    FilteredSpace space;
    for (size_t i = 0; i < n; ++i) {
        space.names.push_back("x" + std::to_string(i));
        space.filtration.push_back(g.grid(-2, 2));
    }
    inst.c0 = FilteredComplex{space, from_orthonormal(d0, space, space), std::nullopt};
    inst.c = FilteredComplex{space, from_orthonormal(d, space, space), std::nullopt};
    inst.map0 = from_orthonormal(map0, space, space);
    inst.map = from_orthonormal(map, space, space);

    inst.sigma = opt.sigma_factor * std::max(suggest_sigma(inst.c0, inst.map0), suggest_sigma(inst.c, inst.map));
    inst.precision = opt.precision_factor * (space.spread() + inst.sigma + 1 + margin);
    inst.c0.precision = inst.c.precision = inst.precision;
    if (opt.truncate) {
        inst.c0.d = truncate_nonzero(inst.c0.d, inst.precision);
        inst.c.d = truncate_nonzero(inst.c.d, inst.precision);
        inst.map0 = truncate_nonzero(inst.map0, inst.precision);
        inst.map = truncate_nonzero(inst.map, inst.precision);
    }
    return inst;
}

SpectralFiltration random_filtration(uint64_t seed, const CrossRing& ring, bool nonneg) {
    Draw g(seed);
    g.q = 1 + static_cast<int>(g.below(24));
    SpectralFiltration f;
    f.ring = ring;
    f.nonneg_mode = nonneg;
    const size_t b = ring.basis_size();
    Exponent level = g.grid(-1, 1);
    f.values.push_back(level);
    if (!nonneg) {
        for (size_t j = 1; j < b; ++j) f.values.push_back(g.grid(-1, 1));
        return f;
    }
    // Drops c_j - c_{j+1} >= 0 with total at most A_L, which keeps the wrap term nonnegative.
    Exponent budget = ring.a_l;
    for (size_t j = 1; j < b; ++j) {
        Exponent drop = g.coin(1, 4) ? Exponent(0) : g.grid(0, budget);
        if (g.coin(1, 6)) drop = budget; // saturate now and then
        budget -= drop;
        level -= drop;
        f.values.push_back(level);
    }
    return f;
}

Barcode random_barcode(uint64_t seed, size_t max_bars, bool allow_infinite) {
    Draw g(seed);
    g.q = 1 + static_cast<int>(g.below(6));
    Barcode b;
    const size_t count = g.below(max_bars + 1);
    for (size_t k = 0; k < count; ++k) {
        Bar bar;
        bar.birth = g.grid(-2, 2);
        if (!(allow_infinite && g.coin(1, 5))) bar.length = g.grid(ratio(1, g.q), 3);
        b.bars.push_back(bar);
    }
    b.normalize();
    return b;
}

PeriodicBarcode random_periodic(uint64_t seed) {
    Draw g(seed);
    g.q = 1 + static_cast<int>(g.below(8));
    PeriodicBarcode p;
    const size_t big_n = 1 + g.below(4);
    p.period_index = 2 * big_n;
    p.kappa = g.grid(ratio(1, g.q), 1);
    p.period_action = p.kappa * Exponent(static_cast<long>(p.period_index));
    const Exponent span = p.period_action * 2;
    for (size_t k = 0; k < p.period_index; ++k) {
        Barcode b;
        const size_t count = g.below(4);
        for (size_t i = 0; i < count; ++i) {
            Bar bar;
            bar.birth = g.grid(-span, span);
            if (!g.coin(1, 4)) bar.length = g.grid(ratio(1, g.q), span);
            b.bars.push_back(bar);
        }
        b.normalize();
        p.window.push_back(b);
    }
    return p;
}

} // namespace nov
