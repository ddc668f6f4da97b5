#include "oracles.hpp"

#include "novikov/complex.hpp"
#include "novikov/errors.hpp"
#include "novikov/instance.hpp"
#include "novikov/io.hpp"

#include <doctest.h>

using namespace nov;

namespace {

NovikovScalar T(const std::string& text, ExtExponent p = std::nullopt) { return parse_scalar(text, p); }
Exponent q(const char* s) { return parse_rational(s); }

FilteredComplex complex_of(const std::string& json) { return parse_complex(json).complex; }

const char* kPair = R"({"generators": [{"name": "y", "filtration": "2"}, {"name": "x", "filtration": "1/2"}],
  "differential": [{"from": "y", "to": "x", "coeff": ["0"]}]})";

const char* kFour = R"({"generators": [
    {"name": "x1", "filtration": "0"}, {"name": "x2", "filtration": "0"},
    {"name": "y1", "filtration": "1"}, {"name": "y2", "filtration": "3"}],
  "differential": [{"from": "y1", "to": "x1", "coeff": ["0"]}, {"from": "y1", "to": "x2", "coeff": ["0"]},
                   {"from": "y2", "to": "x2", "coeff": ["0"]}]})";

Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    size_t i = 0;
    for (auto r : rows) {
        size_t j = 0;
        for (auto e : r) m(i, j++) = T(e);
        ++i;
    }
    return m;
}

FilteredSpace flat(size_t n) {
    FilteredSpace s;
    for (size_t i = 0; i < n; ++i) {
        s.names.push_back("e" + std::to_string(i));
        s.filtration.push_back(0);
    }
    return s;
}

} // namespace

TEST_CASE("rational literals") {
    CHECK(parse_rational("6/4") == ratio(3, 2));
    CHECK(format_rational(ratio(-4, 6)) == "-2/3");
    CHECK(format_rational(Exponent(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1.5"), FormatError);
    CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
    CHECK(ceil_rational(ratio(-3, 2)) == -1);
    CHECK(floor_rational(ratio(-3, 2)) == -2);
}

TEST_CASE("addition cancels in pairs") {
    CHECK(T("1 + T^1") + T("T^1 + T^2") == T("1 + T^2"));
    NovikovScalar x = T("T^{1/2} + T^3");
    CHECK((x + x).is_zero());
    NovikovScalar s = NovikovScalar::one(Exponent(3)) + NovikovScalar::monomial(5, Exponent(10));
    CHECK(s.terms() == std::vector<Exponent>{0});
    CHECK(s.precision() == ExtExponent(Exponent(3)));
}

TEST_CASE("multiplication") {
    CHECK(T("1 + T^1") * T("1 + T^1") == T("1 + T^2"));
    CHECK(T("T^{1/2}") * T("T^{1/3}") == T("T^{5/6}"));
    NovikovScalar z = NovikovScalar::zero() * T("1 + T^1", Exponent(4));
    CHECK(z.is_exact_zero());
    // Fast and slow paths agree on awkward denominators.
    NovikovScalar a = T("T^{1/7} + T^{2/3} + T^{5/11}"), b = T("T^{3/7} + T^{1/3} + 1");
    std::vector<Exponent> expect;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) expect.push_back(x + y);
    CHECK(a * b == NovikovScalar::from_terms(expect));
}

TEST_CASE("unit inversion and division") {
    CHECK(invert_unit(NovikovScalar::one()) == NovikovScalar::one());
    NovikovScalar inv = invert_unit(T("1 + T^1", Exponent(3)));
    CHECK(inv.terms() == std::vector<Exponent>{0, 1, 2});
    CHECK_THROWS_AS(invert_unit(T("T^1")), NotAUnit);
    CHECK(divide_in_ring(T("T^2"), T("T^{1/2}")) == T("T^{3/2}"));
    CHECK(divide_in_ring(T("T^1 + T^2"), T("T^1")) == T("1 + T^1"));
    CHECK_THROWS_AS(divide_in_ring(T("1"), T("T^1")), ValuationOrder);
    // x * x^{-1} = 1 below the precision.
    NovikovScalar u = T("1 + T^{1/3} + T^{5/4}", Exponent(6));
    CHECK(agree_below(u * invert_unit(u), NovikovScalar::one(), Exponent(6)));
}

TEST_CASE("filtration of vectors") {
    FilteredSpace s;
    s.names = {"x1", "x2"};
    s.filtration = {2, 5};
    CHECK(*filtration_of(s, {NovikovScalar::one(), NovikovScalar()}) == 2);
    CHECK(*filtration_of(s, {T("T^1"), NovikovScalar()}) == 1);
    CHECK(*filtration_of(s, {NovikovScalar::one(), NovikovScalar::one()}) == 5);
    CHECK(!filtration_of(s, {NovikovScalar(), NovikovScalar()}));
    s.filtration = {2, ratio(1, 2)};
    CHECK(orthonormalize(s) == std::vector<Exponent>{2, ratio(1, 2)});
}

TEST_CASE("spectral value decomposition") {
    FilteredSpace one = flat(1);
    CHECK(uz_decompose(FilteredMap{one, one, mat({{"1"}})}).values() == std::vector<Exponent>{0});
    CHECK(uz_decompose(FilteredMap{one, one, mat({{"T^3"}})}).values() == std::vector<Exponent>{3});
    Matrix m = mat({{"1", "1"}, {"T^1", "0"}});
    CHECK(uz_decompose(FilteredMap{flat(2), flat(2), m}).values() == std::vector<Exponent>{0, 1});
    CHECK(snf_spectral_values(m) == std::vector<Exponent>{0, 1});
    CHECK(oracle::spectral_values_by_minors(m) == std::vector<Exponent>{0, 1});
}

TEST_CASE("greedy SNF matches determinantal divisors") {
    int checked = 0;
    for (uint64_t seed = 0; seed < 60; ++seed) {
        InstanceOptions opt;
        opt.max_dim = 5;
        opt.truncate = false;
        RandomInstance inst = random_instance(seed, opt);
        if (inst.c.dim() > 6) continue;
        Matrix m = orthonormal_matrix(inst.c.d, inst.c.space, inst.c.space);
        std::vector<Exponent> by_minors = oracle::spectral_values_by_minors(m);
        std::vector<Exponent> by_snf = snf_spectral_values(m);
        CHECK(by_snf == by_minors);
        ++checked;
    }
    CHECK(checked > 30);
}

TEST_CASE("validation") {
    CHECK(validate(complex_of(R"({"generators": [{"name": "a", "filtration": "0"}]})")).valid());
    auto up = parse_complex(R"({"generators": [{"name": "x", "filtration": "0"}, {"name": "y", "filtration": "1"}],
      "differential": [{"from": "x", "to": "y", "coeff": ["0"]}]})",
                            false);
    ValidationReport r = validate(up.complex);
    CHECK(r.filtration_violations == std::vector<size_t>{0});
    CHECK_THROWS_AS(require_valid(up.complex), ValidationError);
    auto loop = parse_complex(R"({"generators": [{"name": "x", "filtration": "0"}, {"name": "y", "filtration": "0"}],
      "differential": [{"from": "x", "to": "y", "coeff": ["0"]}, {"from": "y", "to": "x", "coeff": ["0"]}]})",
                              false);
    r = validate(loop.complex);
    CHECK(!r.square_zero);
    CHECK(!r.square_witness.empty());
}

TEST_CASE("barcodes of small complexes") {
    auto zero = complex_of(R"({"generators": [{"name": "a", "filtration": "1"}, {"name": "b", "filtration": "2"}]})");
    BarcodeResult z = barcode(zero);
    REQUIRE(z.barcode.bars.size() == 2);
    CHECK(z.barcode.bars[0].birth == 1);
    CHECK(z.barcode.bars[1].birth == 2);
    CHECK(z.barcode.infinite_count() == 2);
    CHECK(boundary_depth(zero) == 0);

    BarcodeResult p = barcode(complex_of(kPair));
    REQUIRE(p.barcode.bars.size() == 1);
    CHECK(p.barcode.bars[0].birth == ratio(1, 2));
    CHECK(p.barcode.bars[0].length == ExtExponent(ratio(3, 2)));
    CHECK(boundary_depth(complex_of(kPair)) == ratio(3, 2));

    FilteredComplex four = complex_of(kFour);
    LengthSpectrum s = barcode(four).spectrum();
    CHECK(s.finite == std::vector<Exponent>{1, 3});
    CHECK(s.infinite == 0);
    CHECK(boundary_depth(four) == 3);
    CHECK(induced_homology_filtration(four).space.dim() == 0);
    CHECK(induced_homology_filtration(complex_of(kPair)).space.dim() == 0);
}

TEST_CASE("rescaling scales the barcode") {
    FilteredComplex pair = complex_of(kPair);
    CHECK(barcode(rescale(pair, 1)).barcode == barcode(pair).barcode);
    Barcode b = barcode(rescale(pair, 2)).barcode;
    CHECK(b.bars[0].birth == 1);
    CHECK(b.bars[0].length == ExtExponent(Exponent(3)));
    CHECK(barcode(rescale(complex_of(kFour), q("1/2"))).spectrum().finite == std::vector<Exponent>{q("1/2"), q("3/2")});
    for (uint64_t seed = 0; seed < 20; ++seed) {
        RandomInstance inst = random_instance(seed);
        const Exponent s = ratio(static_cast<long>(seed % 5) + 1, 3);
        CHECK(barcode(rescale(inst.c, s)).barcode == barcode(inst.c).barcode.rescaled(s));
    }
}

TEST_CASE("homology matrix") {
    FilteredComplex zero = complex_of(R"({"generators": [{"name": "a", "filtration": "1"}, {"name": "b", "filtration": "2"}]})");
    Matrix d = mat({{"0", "1"}, {"T^1", "0"}});
    FilteredMap h = homology_matrix(zero, d);
    CHECK(h.matrix == d);
    FilteredComplex four = complex_of(kFour);
    CHECK(homology_matrix(four, Matrix::identity(4)).matrix.rows() == 0);
}

TEST_CASE("two reductions agree and certificates verify") {
    for (uint64_t seed = 100; seed < 140; ++seed) {
        InstanceOptions opt;
        opt.max_dim = 10;
        RandomInstance inst = random_instance(seed, opt);
        BarcodeResult br = barcode(inst.c);
        std::vector<Exponent> lengths = br.spectrum().finite;
        lengths.insert(lengths.end(), br.null_pairs.size(), Exponent(0));
        std::sort(lengths.begin(), lengths.end());
        std::vector<Exponent> snf = snf_bar_values(inst.c);
        std::sort(snf.begin(), snf.end());
        CHECK(lengths == snf);
        Matrix m = orthonormal_matrix(inst.c.d, inst.c.space, inst.c.space);
        CHECK(verify_snf(m, smith_normal_form(m)).ok());
    }
}
