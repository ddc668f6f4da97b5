#include "novikov/cross.hpp"
#include "novikov/errors.hpp"
#include "novikov/instance.hpp"

#include <doctest.h>

using namespace nov;

namespace {

SpectralFiltration filt(Family f, int n, std::vector<Exponent> values, bool nonneg = true) {
    SpectralFiltration s;
    s.ring = cross_ring(f, n);
    s.values = std::move(values);
    s.nonneg_mode = nonneg;
    return s;
}

} // namespace

TEST_CASE("ring invariants") {
    CrossRing s1 = cross_ring(Family::Sn, 1);
    CHECK(s1.n_l == 1);
    CHECK(s1.big_n == 2);
    CHECK(s1.c == ratio(1, 2));
    CHECK(s1.kappa == ratio(1, 4));
    CHECK(s1.basis_size() == 2);
    for (int n = 1; n <= 10; ++n) CHECK(cross_ring(Family::CPn, n).c == ratio(n, n + 1));
    CrossRing h2 = cross_ring(Family::HPn, 2);
    CHECK(h2.n_l == 8);
    CHECK(h2.big_n == 12);
    CHECK(h2.c == ratio(2, 3));
    CHECK_THROWS_AS(cross_ring(Family::RPn, 0), HypothesisFailure);
    CHECK(parse_family("cpn") == Family::CPn);
    CHECK_THROWS_AS(parse_family("op2"), FormatError);
}

TEST_CASE("multiplication spectra") {
    for (Family f : {Family::RPn, Family::CPn, Family::HPn, Family::Sn})
        for (int n = 1; n <= 4; ++n) {
            SpectralFiltration z = filt(f, n, std::vector<Exponent>(cross_ring(f, n).basis_size(), Exponent(0)));
            LengthSpectrum s = mult_spectrum(z, z.ring.point_power());
            std::vector<Exponent> expect(z.ring.basis_size(), ratio(1, 2));
            expect[0] = 0;
            CHECK(s.finite == expect);
            CHECK(gamma_from_filtration(z) == 0);
        }
    CHECK(mult_spectrum(filt(Family::Sn, 1, {0, 0}), 1).finite == std::vector<Exponent>{0, ratio(1, 2)});
    SpectralFiltration cp2 = filt(Family::CPn, 2, {0, ratio(1, 10), ratio(1, 5)}, false);
    std::vector<Exponent> generic = mult_spectrum_generic(cp2, 2);
    std::sort(generic.begin(), generic.end());
    CHECK(generic == std::vector<Exponent>{ratio(-1, 5), ratio(3, 5), ratio(3, 5)});
    CHECK(mult_spectrum(cp2, 2).finite == generic);
    CHECK_THROWS_AS(mult_spectrum(filt(Family::CPn, 2, {0, ratio(1, 10), ratio(1, 5)}), 2), NonFiltered);
}

TEST_CASE("spectral norm from a filtration") {
    CHECK_THROWS_AS(gamma_from_filtration(filt(Family::Sn, 1, {0, ratio(1, 8)})), NonFiltered);
    CHECK(gamma_from_filtration(filt(Family::Sn, 1, {0, ratio(-1, 8)})) == ratio(1, 8));
    // Adding a constant changes nothing.
    for (uint64_t seed = 0; seed < 40; ++seed) {
        CrossRing ring = cross_ring(static_cast<Family>(seed % 4), 1 + static_cast<int>(seed % 3));
        SpectralFiltration f = random_filtration(seed, ring);
        SpectralFiltration g = f;
        for (auto& v : g.values) v += ratio(3, 7);
        CHECK(gamma_from_filtration(f) == gamma_from_filtration(g));
    }
}

TEST_CASE("root of unity bounds") {
    RootBoundReport r = check_root_of_unity_bounds(filt(Family::Sn, 1, {0, 0}), 2, 1);
    CHECK(r.top == ratio(1, 2));
    CHECK(r.top_bound == ratio(1, 2));
    CHECK(r.at_index == 0);
    CHECK(r.index_bound == ratio(1, 4));
    CHECK_THROWS_AS(check_root_of_unity_bounds(filt(Family::Sn, 1, {0, 0}), 2, 3), HypothesisFailure);
    CHECK_THROWS_AS(check_root_of_unity_bounds(filt(Family::CPn, 2, {0, 0, 0}), 2, 4), HypothesisFailure);
    // Telescoping holds without nonnegativity too; only the bound check needs it.
    SpectralFiltration loose = filt(Family::CPn, 1, {0, ratio(1, 3)}, false);
    for (long x = 0; x < 2; ++x) {
        Exponent sum = 0;
        for (long j = 0; j < 2; ++j) sum += loose.level(x + j) - loose.level(x + j + 1);
        CHECK(sum == ratio(1, 2));
    }
}

TEST_CASE("closed-form constants") {
    CrossConstants s1 = cross_constants(cross_ring(Family::Sn, 1));
    CHECK(s1.beta_bound == ratio(1, 2));
    CHECK(s1.gamma_bound == ratio(3, 4));
    CHECK(s1.big_c == ratio(3, 2));
    CHECK(s1.s_star == ratio(1, 3));
    for (int n = 1; n <= 10; ++n) {
        CrossConstants k = cross_constants(cross_ring(Family::CPn, n));
        CHECK(k.big_c == ratio(n * (2 * n + 1), n + 1));
    }
    CrossConstants h2 = cross_constants(cross_ring(Family::HPn, 2));
    CHECK(h2.beta_bound == 1);
    CHECK(h2.gamma_bound == ratio(5, 3));
    CHECK(h2.s_star == ratio(1, 5));
    for (Family f : {Family::RPn, Family::CPn, Family::HPn, Family::Sn})
        for (int n = 1; n <= 6; ++n) {
            CrossConstants k = cross_constants(cross_ring(f, n));
            CHECK(k.beta_bound < k.gamma_bound);
            CHECK(k.gamma_bound < k.big_c);
            CHECK(k.s_star > 0);
            CHECK(k.s_star < 1);
        }
}

TEST_CASE("product bound") {
    CrossRing s1 = cross_ring(Family::Sn, 1);
    CHECK(product_bound({s1, s1}, 0) == 1);
    CrossConstants k = cross_constants(s1);
    CHECK(product_bound({s1}, k.beta_bound) == s1.c / (1 - s1.c) * (s1.a_l + k.beta_bound));
    CHECK_THROWS_AS(product_bound({s1, cross_ring(Family::CPn, 1)}, 0), MismatchedMaslov);
    CHECK_THROWS_AS(product_bound({s1}, -1), HypothesisFailure);
}
