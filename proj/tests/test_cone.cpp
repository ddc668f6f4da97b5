#include "oracles.hpp"

#include "novikov/cone.hpp"
#include "novikov/errors.hpp"
#include "novikov/instance.hpp"
#include "novikov/io.hpp"

#include <doctest.h>

using namespace nov;

namespace {

FilteredComplex complex_of(const std::string& json) { return parse_complex(json).complex; }

const char* kPair = R"({"generators": [{"name": "y", "filtration": "2"}, {"name": "x", "filtration": "1/2"}],
  "differential": [{"from": "y", "to": "x", "coeff": ["0"]}]})";

FilteredComplex flat_zero(size_t n, const std::vector<Exponent>& filt = {}) {
    FilteredComplex c;
    for (size_t i = 0; i < n; ++i) {
        c.space.names.push_back("g" + std::to_string(i));
        c.space.filtration.push_back(filt.empty() ? Exponent(0) : filt[i]);
    }
    c.d = Matrix(n, n);
    return c;
}

std::vector<Exponent> doubled(const std::vector<Exponent>& v) {
    std::vector<Exponent> r;
    for (const auto& e : v) r.push_back(e), r.push_back(e);
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace

TEST_CASE("cone of the identity on a point") {
    ShiftedCone sc = build_cone(flat_zero(1), Matrix::identity(1), 5);
    BarcodeResult br = barcode(sc.cone);
    CHECK(br.spectrum().finite == std::vector<Exponent>{5});
    CHECK(br.spectrum().infinite == 0);
}

TEST_CASE("cone of the zero map is a direct sum") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        RandomInstance inst = random_instance(seed);
        const size_t n = inst.c.dim();
        ShiftedCone sc = build_cone(inst.c, Matrix(n, n), 3);
        LengthSpectrum s = barcode(sc.cone).spectrum();
        LengthSpectrum base = barcode(inst.c).spectrum();
        CHECK(s.finite == doubled(base.finite));
        CHECK(s.infinite == 2 * base.infinite);
    }
}

TEST_CASE("cone of the identity on the acyclic pair") {
    FilteredComplex pair = complex_of(kPair);
    // Unshifted, the cone of the identity cancels in zero-length pairs.
    BarcodeResult flat = barcode(build_cone(pair, Matrix::identity(2), 0).cone);
    CHECK(flat.spectrum().finite.empty());
    CHECK(flat.null_pairs.size() == 2);
    CHECK(barcode(build_cone(pair, Matrix::identity(2), 1).cone).spectrum().finite == std::vector<Exponent>{1, 1});
    ShiftedCone sc = build_cone(pair, Matrix::identity(2), 5);
    CHECK(barcode(sc.cone).spectrum().finite == std::vector<Exponent>{ratio(3, 2), ratio(3, 2)});
    // Reference: the explicit 4x4 differential on (y, x, y', x') with
    // d y = x + T^5 y', d x = T^5 x', d y' = x'.
    FilteredComplex explicit_cone = complex_of(R"({"generators": [
        {"name": "y", "filtration": "2"}, {"name": "x", "filtration": "1/2"},
        {"name": "y'", "filtration": "2"}, {"name": "x'", "filtration": "1/2"}],
      "differential": [{"from": "y", "to": "x", "coeff": ["0"]}, {"from": "y", "to": "y'", "coeff": ["5"]},
                       {"from": "x", "to": "x'", "coeff": ["5"]}, {"from": "y'", "to": "x'", "coeff": ["0"]}]})");
    CHECK(barcode(explicit_cone).spectrum().finite == std::vector<Exponent>{ratio(3, 2), ratio(3, 2)});
    Matrix m = orthonormal_matrix(explicit_cone.d, explicit_cone.space, explicit_cone.space);
    CHECK(oracle::spectral_values_by_minors(m) == std::vector<Exponent>{ratio(3, 2), ratio(3, 2)});
}

TEST_CASE("separation threshold") {
    CHECK(suggest_sigma(flat_zero(2, {0, 1}), Matrix::identity(2)) == 2);
    CHECK(suggest_sigma(complex_of(kPair), Matrix::identity(2)) == 4);
}

TEST_CASE("split of the identity and of the zero map") {
    SplitSpectrum s = split_spectrum(build_cone(flat_zero(2), Matrix::identity(2), 5));
    CHECK(s.low.empty());
    CHECK(s.high == std::vector<Exponent>{5, 5});
    CHECK(s.infinite == 0);

    RandomInstance inst = random_instance(3);
    const size_t n = inst.c.dim();
    SplitSpectrum z = split_spectrum(build_cone(inst.c, Matrix(n, n), suggest_sigma(inst.c, Matrix(n, n))));
    LengthSpectrum base = barcode(inst.c).spectrum();
    CHECK(z.low == doubled(base.finite));
    CHECK(z.high.empty());
    CHECK(z.infinite == 2 * base.infinite);
}

TEST_CASE("split fails below the threshold") {
    // Bar of length 3/2 in C against sigma = 1: the doubled low part is cut.
    CHECK_THROWS_AS(split_spectrum(build_cone(complex_of(kPair), Matrix::identity(2), 1)), SeparationFailure);
}

TEST_CASE("cone spectrum of a map between zero complexes") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        RandomInstance inst = random_instance(seed);
        FilteredComplex c = inst.c;
        const size_t n = c.dim();
        c.d = Matrix(n, n);
        c.precision = std::nullopt;
        // Filtered map: keep the entries of the instance's chain map that do not raise the filtration.
        Matrix d_map = inst.map;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                auto v = d_map(i, j).valuation();
                if (!v || c.space.filtration[i] - *v > c.space.filtration[j]) d_map(i, j) = NovikovScalar();
                else d_map(i, j) = NovikovScalar::monomial(*v);
            }
        std::vector<Exponent> cone = barcode(build_cone(c, d_map, 0).cone).spectrum().finite;
        std::vector<Exponent> values;
        for (const auto& v : uz_decompose(FilteredMap{c.space, c.space, d_map}).values())
            if (v > 0) values.push_back(v);
        std::sort(values.begin(), values.end());
        CHECK(cone == values);
    }
}

TEST_CASE("deformation without a shift") {
    FilteredComplex c0 = complex_of(R"({"generators": [{"name": "x", "filtration": "0"}, {"name": "y", "filtration": "5"}],
      "differential": [{"from": "y", "to": "x", "coeff": ["0"]}]})");
    FilteredComplex c = complex_of(R"({"generators": [{"name": "x", "filtration": "0"}, {"name": "y", "filtration": "5"}],
      "differential": [{"from": "y", "to": "x", "coeff": ["0", "5"]}]})");
    DeformationBasicReport r = check_deformation_basic(c0, c, 10);
    CHECK(r.perturbation_shift == ExtExponent(Exponent(10)));
    CHECK(r.below0 == std::vector<Exponent>{5});
    CHECK(r.below == std::vector<Exponent>{5});
    CHECK(check_deformation_basic(c0, c0, 10).verified == 1);
    FilteredComplex near = complex_of(R"({"generators": [{"name": "x", "filtration": "0"}, {"name": "y", "filtration": "5"}],
      "differential": [{"from": "y", "to": "x", "coeff": ["0", "-4"]}]})");
    CHECK_THROWS_AS(check_deformation_basic(c0, near, 2), HypothesisFailure);
}

TEST_CASE("deformation with a cone, trivial perturbation") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
        RandomInstance inst = random_instance(seed);
        const Exponent a = boundary_depth(inst.c0) + 1;
        for (DeformationCase which : {DeformationCase::Low, DeformationCase::High}) {
            DeformationConeReport r =
                check_deformation_cone(inst.c0, inst.c0, inst.map0, inst.map0, inst.sigma, a, a + 1, which);
            CHECK(r.low0 == r.low);
            CHECK(r.high0 == r.high);
        }
    }
}

TEST_CASE("deformation hypotheses are enforced") {
    uint64_t seed = 0;
    RandomInstance inst = random_instance(seed);
    while (inst.c0.d == inst.c.d) inst = random_instance(++seed);
    Matrix diff = inst.c.d + inst.c0.d; // characteristic 2
    ExtExponent shift = filtration_shift(FilteredMap{inst.c.space, inst.c.space, diff});
    REQUIRE(shift);
    const Exponent too_big = *shift + 1;
    CHECK_THROWS_AS(check_deformation_cone(inst.c0, inst.c, inst.map0, inst.map, inst.sigma, too_big, too_big + 1,
                                           DeformationCase::Low),
                    HypothesisFailure);
    CHECK_THROWS_AS(check_deformation_cone(inst.c0, inst.c, inst.map0, inst.map, inst.sigma, inst.a, inst.a,
                                           DeformationCase::Low),
                    HypothesisFailure);
    CHECK_THROWS_AS(check_deformation_cone(inst.c0, inst.c, inst.map0, inst.map, 0, inst.a, inst.big_a,
                                           DeformationCase::Low),
                    HypothesisFailure);
}

TEST_CASE("deformation on seeded instances matches direct cone barcodes") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        RandomInstance inst = random_instance(seed);
        DeformationConeReport r = check_deformation_cone(inst.c0, inst.c, inst.map0, inst.map, inst.sigma, inst.a,
                                                         inst.big_a, inst.which);
        // Reference spectra from the second reduction algorithm on the assembled cones.
        std::vector<Exponent> s0 = snf_bar_values(build_cone(inst.c0, inst.map0, inst.sigma).cone);
        std::vector<Exponent> s = snf_bar_values(build_cone(inst.c, inst.map, inst.sigma).cone);
        std::sort(s0.begin(), s0.end());
        std::sort(s.begin(), s.end());
        std::vector<Exponent> low0 = low_part(s0, inst.sigma), low = low_part(s, inst.sigma);
        std::vector<Exponent> high0 = high_part(s0, inst.sigma), high = high_part(s, inst.sigma);
        std::erase(low0, Exponent(0));
        std::erase(low, Exponent(0));
        CHECK(r.low0 == low0);
        CHECK(r.low == low);
        CHECK(r.high0 == high0);
        CHECK(r.high == high);
        for (size_t k = 0; k < r.verified; ++k) {
            if (inst.which == DeformationCase::Low) CHECK(low0[k] == low[k]);
            else CHECK(high0[k] == high[k]);
        }
        if (inst.which == DeformationCase::High) {
            REQUIRE(r.transcript);
            CHECK(r.transcript->stages[3].rows() == r.transcript->stages[0].rows());
        }
    }
}

TEST_CASE("instances are reproducible") {
    RandomInstance a = random_instance(42), b = random_instance(42);
    CHECK(a.c.d == b.c.d);
    CHECK(a.map0 == b.map0);
    CHECK(a.sigma == b.sigma);
    InstanceOptions opt;
    opt.max_dim = 0;
    RandomInstance empty = random_instance(5, opt);
    CHECK(empty.c.dim() == 0);
    CHECK(check_deformation_basic(empty.c0, empty.c, empty.a).verified == 0);
}
