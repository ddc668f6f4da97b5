#include "oracles.hpp"

#include "novikov/errors.hpp"
#include "novikov/instance.hpp"
#include "novikov/persistence.hpp"

#include <doctest.h>

using namespace nov;

namespace {

Bar bar(const Exponent& birth, const ExtExponent& length, int mult = 1) {
    Bar b;
    b.birth = birth;
    b.length = length;
    b.multiplicity = mult;
    return b;
}

Barcode code(std::initializer_list<Bar> bars) {
    Barcode b;
    b.bars = bars;
    b.normalize();
    return b;
}

} // namespace

TEST_CASE("bottleneck examples") {
    Barcode one = code({bar(0, Exponent(1))}), two = code({bar(0, Exponent(2))}), none;
    BottleneckResult same = bottleneck(one, one);
    CHECK(same.distance == ExtExponent(Exponent(0)));
    CHECK(same.matching.pairs.size() == 1);
    CHECK(bottleneck(one, two).distance == ExtExponent(Exponent(1)));
    CHECK(bottleneck(one, none).distance == ExtExponent(ratio(1, 2)));
    CHECK(bottleneck(none, none).distance == ExtExponent(Exponent(0)));
    // Infinite bars only match infinite bars.
    Barcode inf = code({bar(0, std::nullopt)});
    CHECK(!bottleneck(inf, none).distance);
    CHECK(bottleneck(inf, code({bar(3, std::nullopt)})).distance == ExtExponent(Exponent(3)));
}

TEST_CASE("bottleneck against exhaustive matching") {
    for (uint64_t seed = 0; seed < 150; ++seed) {
        Barcode b1 = random_barcode(2 * seed, 5), b2 = random_barcode(2 * seed + 1, 5);
        BottleneckResult r = bottleneck(b1, b2);
        CHECK(r.distance == oracle::exhaustive_bottleneck(b1, b2));
        if (r.distance) CHECK(is_delta_matching(b1.expanded(), b2.expanded(), r.matching, *r.distance));
    }
}

TEST_CASE("matching certificates reject too small deltas") {
    Barcode one = code({bar(0, Exponent(1))}), two = code({bar(0, Exponent(2))});
    BottleneckResult r = bottleneck(one, two);
    CHECK(is_delta_matching(one.expanded(), two.expanded(), r.matching, 1));
    CHECK(!is_delta_matching(one.expanded(), two.expanded(), r.matching, ratio(1, 2)));
}

TEST_CASE("distance modulo shifts") {
    Barcode b = code({bar(0, Exponent(1)), bar(ratio(2, 3), Exponent(3))});
    CHECK(bottleneck_mod_shift(b, b.shifted(7)).distance == ExtExponent(Exponent(0)));
    Barcode one = code({bar(0, Exponent(1))});
    CHECK(bottleneck_mod_shift(one, code({bar(ratio(1, 2), Exponent(1))})).distance == ExtExponent(Exponent(0)));
    // (0, 1) against (0, 2): shifting the second by -1/2 matches at cost 1/2.
    ShiftResult r = bottleneck_mod_shift(one, code({bar(0, Exponent(2))}));
    CHECK(r.distance == ExtExponent(ratio(1, 2)));
    CHECK(r.shift == ratio(-1, 2));
    CHECK(oracle::grid_mod_shift(one, code({bar(0, Exponent(2))})).first == ExtExponent(ratio(1, 2)));
}

TEST_CASE("candidate shifts agree with the lattice search") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Barcode b1 = random_barcode(5 * seed, 3), b2 = random_barcode(5 * seed + 3, 3);
        ShiftResult r = bottleneck_mod_shift(b1, b2);
        auto [grid, at] = oracle::grid_mod_shift(b1, b2);
        CHECK(r.distance == grid);
        CHECK(nov::ext_less(r.distance, ExtExponent(Exponent(0))) == false);
        CHECK(!nov::ext_less(bottleneck(b1, b2).distance, r.distance));
        if (r.distance) CHECK(oracle::exhaustive_bottleneck(b1, b2.shifted(r.shift)) == r.distance);
    }
}

TEST_CASE("grid validation mode") {
    Barcode one = code({bar(0, Exponent(1))}), two = code({bar(0, Exponent(2))});
    ShiftResult g = bottleneck_mod_shift_grid(one, two, -2, 2, 16);
    CHECK(g.distance == ExtExponent(ratio(1, 2)));
    CHECK(g.candidates == 17);
}

TEST_CASE("length multiset") {
    Barcode b = code({bar(0, Exponent(1)), bar(5, Exponent(1))});
    CHECK(length_multiset(b) == std::vector<ExtExponent>{Exponent(1), Exponent(1)});
    CHECK(length_multiset(Barcode{}).empty());
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Barcode r = random_barcode(seed, 6);
        CHECK(length_multiset(r) == length_multiset(r.shifted(ratio(static_cast<long>(seed), 7))));
    }
}

TEST_CASE("periodic endpoint counting") {
    PeriodicBarcode p;
    p.period_index = 2;
    p.kappa = ratio(1, 4);
    p.period_action = ratio(1, 2);
    p.window = {Barcode{}, Barcode{}};
    EndpointReport empty = lsv_endpoint_count(p);
    CHECK(empty.total == 0);
    CHECK(empty.in_window == 0);
    p.window[0] = code({bar(ratio(1, 8), std::nullopt)});
    EndpointReport one = lsv_endpoint_count(p);
    CHECK(one.total == 1);
    CHECK(one.in_window == 1);
    p.window.pop_back();
    CHECK_THROWS_AS(lsv_endpoint_count(p), HypothesisFailure);
}

TEST_CASE("periodic endpoint counting against enumeration") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        PeriodicBarcode p = random_periodic(seed);
        EndpointReport r = lsv_endpoint_count(p);
        oracle::EndpointCounts o = oracle::enumerate_endpoints(p);
        CHECK(r.total == o.assembled);
        CHECK(r.in_window == o.in_window);
        CHECK(r.leaving == r.entering);
        Barcode b0 = assemble_window(p);
        size_t endpoints = 0;
        for (const auto& bar : b0.expanded()) endpoints += bar.infinite() ? 1 : 2;
        CHECK(endpoints == r.total);
    }
}
