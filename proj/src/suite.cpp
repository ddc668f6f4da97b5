#include "novikov/suite.hpp"

#include "novikov/errors.hpp"
#include "novikov/instance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

namespace nov {

namespace {

using Tally = std::map<std::string, size_t>;
using Check = std::function<void(uint64_t seed, size_t max_dim, Tally&)>;

std::string join(const std::vector<Exponent>& v) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + format_rational(e);
    return "{" + s + "}";
}

void expect(bool ok, const std::string& what) {
    if (!ok) throw AssertionFailure(what);
}

void separation(uint64_t seed, size_t max_dim, Tally& t) {
    InstanceOptions opt;
    opt.max_dim = max_dim;
    opt.sigma_factor = 2;
    RandomInstance inst = random_instance(seed, opt);
    auto one = [&](const FilteredComplex& c, const Matrix& map) {
        const Exponent s = suggest_sigma(c, map);
        SplitSpectrum a = split_spectrum(build_cone(c, map, s));
        SplitSpectrum b = split_spectrum(build_cone(c, map, 2 * s));
        std::vector<Exponent> shifted = a.high;
        for (auto& e : shifted) e += s;
        expect(a.low == b.low, "low part moved with sigma: " + join(a.low) + " vs " + join(b.low));
        expect(shifted == b.high, "high part did not shift by sigma: " + join(a.high) + " vs " + join(b.high));
        expect(a.infinite == b.infinite, "infinite count moved with sigma");
        t["low"] += a.low.size();
        t["high"] += a.high.size();
        t["infinite"] += a.infinite;
    };
    one(inst.c, inst.map);
    one(inst.c0, inst.map0);
}

void deformation_basic(uint64_t seed, size_t max_dim, Tally& t) {
    InstanceOptions opt;
    opt.max_dim = max_dim;
    RandomInstance inst = random_instance(seed, opt);
    auto r1 = check_deformation_basic(inst.c0, inst.c, inst.a);
    auto r2 = check_deformation_basic(inst.c, inst.c0, inst.a);
    expect(r1.verified == r2.verified, "verified prefix depends on direction");
    t["verified"] += r1.verified;
}

void deformation(uint64_t seed, size_t max_dim, Tally& t) {
    InstanceOptions opt;
    opt.max_dim = max_dim;
    RandomInstance inst = random_instance(seed, opt);
    auto run = [&](DeformationCase which) {
        auto r = check_deformation_cone(inst.c0, inst.c, inst.map0, inst.map, inst.sigma, inst.a, inst.big_a, which);
        const std::string tag = which == DeformationCase::Low ? "case1" : "case2";
        t[tag] += 1;
        t[tag + "_verified"] += r.verified;
        if (r.transcript) t["transcripts"] += 1;
    };
    run(inst.which);
    // Case-2 data satisfies the Case-1 hypotheses too.
    if (inst.which == DeformationCase::High) run(DeformationCase::Low);
}

void snf(uint64_t seed, size_t max_dim, Tally& t) {
    InstanceOptions opt;
    opt.max_dim = max_dim;
    opt.which = DeformationCase::Low;
    RandomInstance inst = random_instance(seed, opt);
    for (const FilteredComplex* c : {&inst.c0, &inst.c}) {
        BarcodeResult br = barcode(*c);
        std::vector<Exponent> from_bars = br.spectrum().finite;
        for (size_t k = 0; k < br.null_pairs.size(); ++k) from_bars.push_back(0);
        std::sort(from_bars.begin(), from_bars.end());
        std::vector<Exponent> from_snf = snf_bar_values(*c);
        std::sort(from_snf.begin(), from_snf.end());
        expect(from_bars == from_snf, "barcode lengths " + join(from_bars) + " differ from SNF values " + join(from_snf));
        Matrix m = orthonormal_matrix(c->d, c->space, c->space);
        SnfResult r = smith_normal_form(m);
        SnfCertificate cert = verify_snf(m, r);
        expect(cert.entries_in_ring, "SNF transform has entries outside the valuation ring");
        expect(cert.unit_determinants, "SNF transform is not unimodular");
        expect(cert.product_diagonal, "U M V is not the claimed diagonal");
        t["values"] += from_snf.size();
    }
}

void root_bounds(uint64_t seed, size_t max_dim, Tally& t) {
    const Family fam = static_cast<Family>(seed % 4);
    const int n = 1 + static_cast<int>((seed / 4) % std::max<size_t>(max_dim, 1));
    CrossRing ring = cross_ring(fam, n);
    SpectralFiltration f = random_filtration(seed, ring, true);
    const int r = ring.degree;
    for (int p = 1; p <= r; ++p) {
        if ((static_cast<long>(p) * ring.big_n) % (r + 1) != 0) continue;
        const int k = static_cast<int>(static_cast<long>(p) * ring.big_n / (r + 1));
        const int m = (r + 1) / std::gcd(p, r + 1);
        check_root_of_unity_bounds(f, m, k);
        check_root_of_unity_bounds(f, 2 * m, k);
        t["checks"] += 2;
    }
    for (int p = 0; p <= r + 1; ++p) {
        std::vector<Exponent> generic = mult_spectrum_generic(f, p);
        std::sort(generic.begin(), generic.end());
        expect(generic == mult_spectrum(f, p).finite, "generic spectrum of a^" + std::to_string(p) + " disagrees");
    }
    gamma_from_filtration(f);
    t[family_name(fam)] += 1;
}

void lsv(uint64_t seed, size_t, Tally& t) {
    EndpointReport rep = lsv_endpoint_count(random_periodic(seed));
    t["in_window"] += rep.in_window;
    t["leaving"] += rep.leaving;
}

bool ext_le(const ExtExponent& a, const ExtExponent& b) { return !ext_less(b, a); }

void bottleneck_props(uint64_t seed, size_t max_dim, Tally& t) {
    const size_t bars = std::max<size_t>(max_dim, 1);
    Barcode b1 = random_barcode(3 * seed, bars), b2 = random_barcode(3 * seed + 1, bars),
            b3 = random_barcode(3 * seed + 2, bars);
    auto d12 = bottleneck(b1, b2), d21 = bottleneck(b2, b1), d23 = bottleneck(b2, b3), d13 = bottleneck(b1, b3);
    expect(bottleneck(b1, b1).distance == ExtExponent(Exponent(0)), "d(b, b) is not 0");
    expect(d12.distance == d21.distance, "distance is not symmetric");
    expect(ext_le(d13.distance, ext_add(d12.distance, d23.distance)), "triangle inequality fails");
    if (d12.distance) {
        expect(is_delta_matching(b1.expanded(), b2.expanded(), d12.matching, *d12.distance),
               "matching certificate does not realize the distance");
        t["finite"] += 1;
    }
    const Exponent c = ratio(static_cast<long>(seed % 7) - 3, 2);
    expect(bottleneck(b1.shifted(c), b2.shifted(c)).distance == d12.distance, "distance is not shift invariant");
    ShiftResult s = bottleneck_mod_shift(b1, b2);
    expect(ext_le(s.distance, d12.distance), "mod-shift distance exceeds the plain distance");
    expect(bottleneck_mod_shift(b1, b2.shifted(c)).distance == s.distance, "mod-shift distance depends on a shift");
    if (s.distance)
        expect(is_delta_matching(b1.expanded(), b2.shifted(s.shift).expanded(), s.matching, *s.distance),
               "mod-shift certificate does not realize the distance");
}

// Everything an instance produces, rendered as text (errors included).
std::string fingerprint(uint64_t seed, size_t max_dim, const Exponent& factor) {
    std::ostringstream out;
    auto guard = [&](const char* tag, const std::function<void()>& f) {
        out << tag << ":";
        try {
            f();
        } catch (const Error& e) {
            out << "error " << e.kind();
        }
        out << "\n";
    };
    InstanceOptions opt;
    opt.max_dim = max_dim;
    opt.precision_factor = factor;
    RandomInstance inst = random_instance(seed, opt);
    auto bars = [&](const FilteredComplex& c) {
        BarcodeResult r = barcode(c);
        for (const auto& b : r.barcode.bars)
            out << format_rational(b.birth) << "+" << format_ext(b.length) << "x" << b.multiplicity << " ";
        out << "null " << r.null_pairs.size();
    };
    guard("bars0", [&] { bars(inst.c0); });
    guard("bars", [&] { bars(inst.c); });
    guard("split", [&] {
        SplitSpectrum s = split_spectrum(build_cone(inst.c, inst.map, inst.sigma));
        out << join(s.low) << join(s.high) << s.infinite;
    });
    guard("basic", [&] {
        auto r = check_deformation_basic(inst.c0, inst.c, inst.a);
        out << join(r.below0) << join(r.below) << r.verified;
    });
    guard("cone", [&] {
        auto r = check_deformation_cone(inst.c0, inst.c, inst.map0, inst.map, inst.sigma, inst.a, inst.big_a,
                                        inst.which);
        out << join(r.low0) << join(r.low) << join(r.high0) << join(r.high) << r.verified;
        if (r.transcript) out << join(r.transcript->values);
    });
    // The separation and SNF configurations.
    InstanceOptions sep;
    sep.max_dim = 8;
    sep.sigma_factor = 2;
    sep.precision_factor = factor;
    RandomInstance wide = random_instance(seed, sep);
    guard("separation", [&] {
        const Exponent s = suggest_sigma(wide.c, wide.map);
        for (const Exponent& sigma : {s, Exponent(2 * s)}) {
            SplitSpectrum sp = split_spectrum(build_cone(wide.c, wide.map, sigma));
            out << join(sp.low) << join(sp.high) << sp.infinite;
        }
    });
    InstanceOptions big;
    big.max_dim = 10;
    big.which = DeformationCase::Low;
    big.precision_factor = factor;
    RandomInstance large = random_instance(seed, big);
    guard("snf", [&] {
        bars(large.c);
        out << join(snf_bar_values(large.c));
    });
    return out.str();
}

void precision(uint64_t seed, size_t max_dim, Tally& t) {
    const std::string once = fingerprint(seed, max_dim, 1), twice = fingerprint(seed, max_dim, 2);
    if (once != twice) {
        // Report the first differing line.
        std::istringstream a(once), b(twice);
        std::string la, lb;
        while (std::getline(a, la) && std::getline(b, lb))
            if (la != lb) break;
        throw AssertionFailure("doubling the precision changed '" + la + "' into '" + lb + "'");
    }
    t["compared"] += 1;
}

struct Prop {
    Check check;
    size_t default_dim;
};

const std::map<std::string, Prop>& registry() {
    static const std::map<std::string, Prop> r{
        {"separation", {separation, 8}},
        {"deformation-basic", {deformation_basic, 6}},
        {"deformation", {deformation, 6}},
        {"snf", {snf, 10}},
        {"root-bounds", {root_bounds, 4}},
        {"lsv", {lsv, 0}},
        {"bottleneck", {bottleneck_props, 6}},
        {"precision", {precision, 6}},
    };
    return r;
}

} // namespace

const std::vector<std::string>& suite_properties() {
    static const std::vector<std::string> names{"separation", "deformation-basic", "deformation", "snf",
                                                "root-bounds", "lsv", "bottleneck", "precision"};
    return names;
}

size_t default_max_dim(const std::string& prop) {
    auto it = registry().find(prop);
    if (it == registry().end()) throw FormatError("unknown property '" + prop + "'");
    return it->second.default_dim;
}

SuiteSummary run_suite(const std::string& prop, const SuiteOptions& opt) {
    const size_t dim = opt.max_dim ? opt.max_dim : default_max_dim(prop);
    const Check& check = registry().at(prop).check;
    SuiteSummary s;
    s.prop = prop;
    const auto start = std::chrono::steady_clock::now();
    for (size_t k = 0; k < opt.seeds; ++k) {
        const uint64_t seed = opt.seed_start + k;
        ++s.runs;
        std::string failure;
        try {
            check(seed, dim, s.tallies);
            ++s.passed;
        } catch (const Error& e) {
            switch (e.error_class()) {
            case ErrorClass::Hypothesis: ++s.hypothesis; break;
            case ErrorClass::Assertion: ++s.assertion; break;
            case ErrorClass::Input: ++s.input; break;
            }
            failure = e.what();
        } catch (const std::exception& e) {
            ++s.assertion;
            failure = std::string("unexpected: ") + e.what();
        }
        if (!failure.empty() && s.failures.size() < 5)
            s.failures.push_back("seed " + std::to_string(seed) + ": " + failure);
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

} // namespace nov
