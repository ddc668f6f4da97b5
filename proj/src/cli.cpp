#include "novikov/cli.hpp"

#include "novikov/cone.hpp"
#include "novikov/cross.hpp"
#include "novikov/errors.hpp"
#include "novikov/io.hpp"
#include "novikov/persistence.hpp"
#include "novikov/suite.hpp"
#include "novikov/svg.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace nov {

namespace {

// Ordered key/value output. Text mode pads the keys; machine mode is key=value.
class Report {
public:
    void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void add(const std::string& key, size_t value) { add(key, std::to_string(value)); }
    void add(const std::string& key, const Exponent& value) { add(key, format_rational(value)); }
    void add(const std::string& key, const ExtExponent& value) { add(key, format_ext(value)); }
    void add(const std::string& key, const std::vector<Exponent>& values) {
        std::string s;
        for (const auto& v : values) s += (s.empty() ? "" : " ") + format_rational(v);
        add(key, s);
    }
    void flag(const std::string& key, bool v) { add(key, v ? "yes" : "no"); }

    void print(std::ostream& out, bool machine) const {
        size_t w = 0;
        for (const auto& r : rows_) w = std::max(w, r.first.size());
        for (const auto& [k, v] : rows_) {
            if (machine)
                out << k << "=" << v << "\n";
            else
                out << k << std::string(w - k.size() + 2, ' ') << v << "\n";
        }
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Globals {
    std::string format = "text";
    std::string precision;
    ExtExponent precision_value() const {
        if (precision.empty()) return std::nullopt;
        return parse_rational(precision);
    }
};

ComplexDocument load_complex(const std::string& path, const Globals& g, bool check = true) {
    return parse_complex(read_file(path), check, g.precision_value());
}

const Matrix& find_map(const ComplexDocument& doc, const std::string& name, const std::string& path) {
    auto it = doc.maps.find(name);
    if (it == doc.maps.end()) throw FormatError(path + ": /maps/" + name + ": missing");
    return it->second;
}

std::vector<Exponent> parse_list(const std::string& text) {
    std::vector<Exponent> r;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        r.push_back(parse_rational(item));
    }
    return r;
}

std::string bar_row(const Bar& b) {
    std::string s = format_rational(b.birth) + " " + format_ext(b.length) + " " + std::to_string(b.multiplicity);
    if (b.degree) s += " " + std::to_string(*b.degree);
    return s;
}

void add_barcode(Report& r, const std::string& prefix, const Barcode& b) {
    r.add(prefix + "count", b.count());
    for (size_t i = 0; i < b.bars.size(); ++i) r.add(prefix + "bar." + std::to_string(i), bar_row(b.bars[i]));
}

std::string names_of(const FilteredSpace& s, const std::vector<size_t>& idx) {
    std::string r;
    for (size_t i : idx) r += (r.empty() ? "" : " ") + s.names[i];
    return r;
}

SpectralFiltration filtration_from(const std::string& family, int n, const std::string& values, bool nonneg) {
    SpectralFiltration f;
    f.ring = cross_ring(parse_family(family), n);
    f.values = values.empty() ? std::vector<Exponent>(f.ring.basis_size(), Exponent(0)) : parse_list(values);
    f.nonneg_mode = nonneg;
    return f;
}

void add_constants(Report& r, const std::string& prefix, const CrossRing& ring) {
    CrossConstants k = cross_constants(ring);
    if (!(k.beta_bound < k.gamma_bound && k.gamma_bound < k.big_c && k.s_star > 0 && k.s_star < 1))
        throw AssertionFailure("constants out of order for " + family_name(ring.family));
    r.add(prefix + "n_L", std::to_string(ring.n_l));
    r.add(prefix + "N_L", std::to_string(ring.big_n));
    r.add(prefix + "kappa", ring.kappa);
    r.add(prefix + "c", k.c);
    r.add(prefix + "beta_bound", k.beta_bound);
    r.add(prefix + "gamma_bound", k.gamma_bound);
    r.add(prefix + "C", k.big_c);
    r.add(prefix + "s_star", k.s_star);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Filtered complexes over the Novikov field: barcodes, cones, deformation checks"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "text or machine (key=value lines)")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--precision", g.precision, "working precision for parsed complexes");

    Report rep;
    int status = 0;
    std::function<void()> action;

    // Shared option storage.
    std::string file, file2, map_name = "D", output, sigma, bound, a_text, big_a_text, family = "sn", values,
                                 title, prop;
    std::vector<std::string> factors;
    int n = 1, power = -1, m = 0, k = 0, which = 1, max_dim = 0;
    uint64_t seed = 0;
    size_t seeds = 100;
    bool mod_shift = false, allow_negative = false, transcript = false;
    std::string matching_out;

    auto* validate_cmd = app.add_subcommand("validate", "check d^2 = 0, filtration and grading");
    validate_cmd->add_option("complex", file)->required();
    validate_cmd->callback([&] {
        ComplexDocument doc = load_complex(file, g, false);
        const FilteredComplex& c = doc.complex;
        ValidationReport v = validate(c);
        rep.add("dim", c.dim());
        rep.flag("square_zero", v.square_zero);
        std::string witness;
        for (auto [i, j] : v.square_witness)
            witness += (witness.empty() ? "" : " ") + c.space.names[j] + "->" + c.space.names[i];
        rep.add("square_witness", witness);
        rep.add("filtration_violations", names_of(c.space, v.filtration_violations));
        rep.add("non_strict", names_of(c.space, v.non_strict));
        std::string grading;
        for (auto [i, j] : v.grading_violations)
            grading += (grading.empty() ? "" : " ") + c.space.names[j] + "->" + c.space.names[i];
        rep.add("grading_violations", grading);
        rep.add("null_pairs", v.null_pair_births);
        rep.flag("valid", v.valid());
        if (!v.valid()) status = static_cast<int>(ErrorClass::Input);
    });

    auto* barcode_cmd = app.add_subcommand("barcode", "barcode of a filtered complex");
    barcode_cmd->add_option("complex", file)->required();
    barcode_cmd->add_option("--output", output, "write the barcode document here");
    barcode_cmd->callback([&] {
        ComplexDocument doc = load_complex(file, g);
        BarcodeResult br = barcode(doc.complex);
        rep.add("dim", doc.complex.dim());
        add_barcode(rep, "", br.barcode);
        LengthSpectrum s = br.spectrum();
        rep.add("spectrum", s.finite);
        rep.add("infinite", s.infinite);
        rep.add("null_pairs", br.null_pairs.size());
        rep.add("boundary_depth", boundary_depth(doc.complex));
        rep.add("exact_below", br.band);
        if (!output.empty()) write_file(output, serialize_barcode(br.barcode));
    });

    auto* cone_cmd = app.add_subcommand("cone", "cone of T^sigma D");
    cone_cmd->add_option("complex", file)->required();
    cone_cmd->add_option("--target", file2, "target complex (defaults to the source)");
    cone_cmd->add_option("--map", map_name, "map name in the source document");
    cone_cmd->add_option("--sigma", sigma, "shift (defaults to the separation threshold)");
    cone_cmd->add_option("--output", output, "write the cone document here");
    cone_cmd->callback([&] {
        ComplexDocument doc = load_complex(file, g);
        const Matrix& d_map = find_map(doc, map_name, file);
        std::optional<ComplexDocument> target;
        if (!file2.empty()) target = load_complex(file2, g);
        Exponent s = sigma.empty() ? suggest_sigma(doc.complex, d_map) : parse_rational(sigma);
        ShiftedCone sc = target ? build_cone(doc.complex, target->complex, d_map, s) : build_cone(doc.complex, d_map, s);
        BarcodeResult br = barcode(sc.cone);
        rep.add("sigma", s);
        rep.add("dim", sc.cone.dim());
        rep.add("spectrum", br.spectrum().finite);
        rep.add("infinite", br.spectrum().infinite);
        if (!output.empty()) write_file(output, serialize_complex(sc.cone));
    });

    auto* split_cmd = app.add_subcommand("split", "split the cone spectrum at sigma");
    split_cmd->add_option("complex", file)->required();
    split_cmd->add_option("--map", map_name, "map name in the document");
    split_cmd->add_option("--sigma", sigma, "shift (defaults to the separation threshold)");
    split_cmd->callback([&] {
        ComplexDocument doc = load_complex(file, g);
        const Matrix& d_map = find_map(doc, map_name, file);
        Exponent threshold = suggest_sigma(doc.complex, d_map);
        Exponent s = sigma.empty() ? threshold : parse_rational(sigma);
        SplitSpectrum sp = split_spectrum(build_cone(doc.complex, d_map, s));
        std::vector<Exponent> reduced = sp.high;
        for (auto& e : reduced) e -= s;
        rep.add("sigma", s);
        rep.add("suggested_sigma", threshold);
        rep.add("low", sp.low);
        rep.add("high", sp.high);
        rep.add("high_minus_sigma", reduced);
        rep.add("infinite", sp.infinite);
        rep.add("homology_dim", sp.homology_dim);
        rep.add("homology_rank", sp.homology_rank);
    });

    auto* basic_cmd = app.add_subcommand("deform-basic", "spectra below A agree when A(d - d0) >= A");
    basic_cmd->add_option("complex0", file)->required();
    basic_cmd->add_option("complex", file2)->required();
    basic_cmd->add_option("--bound", bound, "the level A")->required();
    basic_cmd->callback([&] {
        ComplexDocument c0 = load_complex(file, g), c = load_complex(file2, g);
        Exponent a = parse_rational(bound);
        DeformationBasicReport r1 = check_deformation_basic(c0.complex, c.complex, a);
        check_deformation_basic(c.complex, c0.complex, a);
        rep.add("bound", a);
        rep.add("perturbation_shift", r1.perturbation_shift);
        rep.add("below0", r1.below0);
        rep.add("below", r1.below);
        rep.add("verified", r1.verified);
    });

    auto* dcone_cmd = app.add_subcommand("deform-cone", "cone spectra under a deformation (cases 1 and 2)");
    dcone_cmd->add_option("complex0", file)->required();
    dcone_cmd->add_option("complex", file2)->required();
    dcone_cmd->add_option("--map", map_name, "map name in both documents");
    dcone_cmd->add_option("--sigma", sigma, "shift (defaults to the larger separation threshold)");
    dcone_cmd->add_option("--a", a_text, "lower bound for A(d - d0)")->required();
    dcone_cmd->add_option("--big-a", big_a_text, "lower bound for A(D - D0)")->required();
    dcone_cmd->add_option("--case", which, "1 (low spectra) or 2 (high spectra)")->check(CLI::IsMember({1, 2}));
    dcone_cmd->add_flag("--transcript", transcript, "print the case-2 reduction stages");
    dcone_cmd->callback([&] {
        ComplexDocument c0 = load_complex(file, g), c = load_complex(file2, g);
        const Matrix& map0 = find_map(c0, map_name, file);
        const Matrix& map = find_map(c, map_name, file2);
        Exponent s = sigma.empty() ? Exponent(std::max<Exponent>(suggest_sigma(c0.complex, map0), suggest_sigma(c.complex, map)))
                                   : parse_rational(sigma);
        DeformationCase dc = which == 2 ? DeformationCase::High : DeformationCase::Low;
        DeformationConeReport r = check_deformation_cone(c0.complex, c.complex, map0, map, s, parse_rational(a_text),
                                                         parse_rational(big_a_text), dc);
        rep.add("case", std::to_string(which));
        rep.add("sigma", s);
        rep.add("d_shift", r.d_shift);
        rep.add("map_shift", r.map_shift);
        rep.add("low0", r.low0);
        rep.add("low", r.low);
        rep.add("high0", r.high0);
        rep.add("high", r.high);
        rep.add("verified", r.verified);
        if (r.transcript) {
            rep.add("transcript.values", r.transcript->values);
            if (transcript)
                for (size_t st = 0; st < r.transcript->stages.size(); ++st) {
                    const Matrix& mt = r.transcript->stages[st];
                    for (size_t i = 0; i < mt.rows(); ++i) {
                        std::string row;
                        for (size_t j = 0; j < mt.cols(); ++j) row += (j ? " | " : "") + mt(i, j).to_string();
                        rep.add("stage" + std::to_string(st + 1) + ".row" + std::to_string(i), row);
                    }
                }
        }
    });

    auto bottleneck_action = [&](bool shift) {
        Barcode b1 = parse_barcode(read_file(file)), b2 = parse_barcode(read_file(file2));
        Matching matching;
        if (shift) {
            ShiftResult r = bottleneck_mod_shift(b1, b2);
            rep.add("distance", r.distance);
            rep.add("shift", r.shift);
            rep.add("candidates", r.candidates);
            matching = r.matching;
            if (!matching_out.empty()) write_file(matching_out, serialize_matching(b1, b2.shifted(r.shift), matching));
        } else {
            BottleneckResult r = bottleneck(b1, b2);
            rep.add("distance", r.distance);
            matching = r.matching;
            if (!matching_out.empty()) write_file(matching_out, serialize_matching(b1, b2, matching));
        }
        rep.add("matched", matching.pairs.size());
        rep.add("unmatched", matching.unmatched1.size() + matching.unmatched2.size());
    };

    auto* bn_cmd = app.add_subcommand("bottleneck", "bottleneck distance of two barcodes");
    bn_cmd->add_option("barcode1", file)->required();
    bn_cmd->add_option("barcode2", file2)->required();
    bn_cmd->add_flag("--mod-shift", mod_shift, "minimize over global shifts of the second barcode");
    bn_cmd->add_option("--matching", matching_out, "write the matching certificate here");
    bn_cmd->callback([&] { bottleneck_action(mod_shift); });

    auto* bns_cmd = app.add_subcommand("bottleneck-shift", "bottleneck distance modulo global shifts");
    bns_cmd->add_option("barcode1", file)->required();
    bns_cmd->add_option("barcode2", file2)->required();
    bns_cmd->add_option("--matching", matching_out, "write the matching certificate here");
    bns_cmd->callback([&] { bottleneck_action(true); });

    auto* lsv_cmd = app.add_subcommand("lsv-count", "endpoint count of a periodic barcode window");
    lsv_cmd->add_option("window", file)->required();
    lsv_cmd->callback([&] {
        EndpointReport r = lsv_endpoint_count(parse_periodic(read_file(file)));
        rep.add("total", r.total);
        rep.add("in_window", r.in_window);
        rep.add("lower_reps_upper", r.lower_reps_upper);
        rep.add("lower_reps_lower", r.lower_reps_lower);
        rep.add("upper_reps_upper", r.upper_reps_upper);
        rep.add("upper_reps_lower", r.upper_reps_lower);
        rep.add("leaving", r.leaving);
        rep.add("entering", r.entering);
        rep.add("long_orbits", r.long_orbits);
    });

    auto ring_options = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "rpn, cpn, hpn or sn");
        cmd->add_option("--n", n, "dimension parameter")->check(CLI::PositiveNumber);
        cmd->add_option("--values", values, "l(a^0),...,l(a^r), comma separated (default all 0)");
    };

    auto* ms_cmd = app.add_subcommand("mult-spectrum", "spectrum of multiplication by a^k");
    ring_options(ms_cmd);
    ms_cmd->add_option("--power", power, "k (default: the point class)");
    ms_cmd->add_flag("--allow-negative", allow_negative, "skip the nonnegativity requirement");
    ms_cmd->callback([&] {
        SpectralFiltration f = filtration_from(family, n, values, !allow_negative);
        const int k_pow = power < 0 ? f.ring.point_power() : power;
        LengthSpectrum s = mult_spectrum(f, k_pow);
        std::vector<Exponent> generic = mult_spectrum_generic(f, k_pow);
        std::sort(generic.begin(), generic.end());
        if (generic != s.finite) throw AssertionFailure("closed form and generic decomposition disagree");
        rep.add("power", std::to_string(k_pow));
        rep.add("spectrum", s.finite);
        if (k_pow == f.ring.point_power()) rep.add("gamma", gamma_from_filtration(f));
    });

    auto* rb_cmd = app.add_subcommand("root-bounds", "telescoping identity and spectral bounds for a^m = q^j");
    ring_options(rb_cmd);
    rb_cmd->add_option("--m", m, "order (default: the smallest valid one)");
    rb_cmd->add_option("--k", k, "codegree (default: n_L)");
    rb_cmd->callback([&] {
        SpectralFiltration f = filtration_from(family, n, values, true);
        const int kk = k > 0 ? k : f.ring.n_l;
        int mm = m;
        if (mm == 0) {
            const int r1 = f.ring.basis_size();
            if ((static_cast<long>(kk) * r1) % f.ring.big_n != 0)
                throw HypothesisFailure("codegree " + std::to_string(kk) + " is not a power of a in this ring");
            mm = r1 / std::gcd(static_cast<int>(static_cast<long>(kk) * r1 / f.ring.big_n), r1);
        }
        RootBoundReport r = check_root_of_unity_bounds(f, mm, kk);
        rep.add("m", std::to_string(mm));
        rep.add("k", std::to_string(kk));
        rep.add("power", std::to_string(r.power));
        rep.add("telescoped", r.telescoped);
        rep.add("sums", r.sums);
        rep.add("spectrum", r.spectrum);
        rep.add("beta_top", r.top);
        rep.add("beta_top_bound", r.top_bound);
        rep.add("index", r.index);
        rep.add("beta_index", r.at_index);
        rep.add("beta_index_bound", r.index_bound);
    });

    auto* cb_cmd = app.add_subcommand("cross-bounds", "closed-form constants of a ring (all rings without --family)");
    auto* family_opt = cb_cmd->add_option("--family", family, "rpn, cpn, hpn or sn");
    auto* n_opt = cb_cmd->add_option("--n", n, "dimension parameter")->check(CLI::PositiveNumber);
    cb_cmd->callback([&] {
        if (family_opt->count()) {
            add_constants(rep, "", cross_ring(parse_family(family), n));
            return;
        }
        const int top = n_opt->count() ? n : 10;
        for (const char* fam : {"rpn", "cpn", "hpn", "sn"})
            for (int j = 1; j <= top; ++j)
                add_constants(rep, std::string(fam) + "." + std::to_string(j) + ".", cross_ring(parse_family(fam), j));
    });

    auto* pb_cmd = app.add_subcommand("product-bound", "bound for a product of rings with equal Maslov number");
    pb_cmd->add_option("--factor", factors, "family:n, repeatable")->required();
    pb_cmd->add_option("--beta", bound, "the beta term")->required();
    pb_cmd->callback([&] {
        std::vector<CrossRing> rings;
        for (const auto& f : factors) {
            auto colon = f.find(':');
            if (colon == std::string::npos) throw FormatError("factor '" + f + "' is not family:n");
            int fn = 0;
            try {
                fn = std::stoi(f.substr(colon + 1));
            } catch (const std::exception&) {
                throw FormatError("factor '" + f + "' has no integer n");
            }
            rings.push_back(cross_ring(parse_family(f.substr(0, colon)), fn));
        }
        rep.add("bound", product_bound(rings, parse_rational(bound)));
    });

    auto* rs_cmd = app.add_subcommand("random-suite", "seeded property checks");
    rs_cmd->add_option("--prop", prop, "property (default: all)");
    rs_cmd->add_option("--seeds", seeds, "number of seeds");
    rs_cmd->add_option("--seed", seed, "first seed");
    rs_cmd->add_option("--max-dim", max_dim, "instance size (property default when 0)");
    rs_cmd->callback([&] {
        std::vector<std::string> props = prop.empty() ? suite_properties() : std::vector<std::string>{prop};
        for (const auto& p : props) default_max_dim(p); // reject unknown names before running anything
        for (const auto& p : props) {
            SuiteSummary s = run_suite(p, SuiteOptions{seed, seeds, static_cast<size_t>(max_dim)});
            const std::string pre = props.size() > 1 ? p + "." : "";
            rep.add(pre + "runs", s.runs);
            rep.add(pre + "passed", s.passed);
            rep.add(pre + "hypothesis_failures", s.hypothesis);
            rep.add(pre + "assertion_failures", s.assertion);
            rep.add(pre + "input_failures", s.input);
            for (const auto& [key, v] : s.tallies) rep.add(pre + "tally." + key, v);
            for (size_t i = 0; i < s.failures.size(); ++i) rep.add(pre + "failure." + std::to_string(i), s.failures[i]);
            err << p << ": " << s.seconds << " s\n";
            int code = s.assertion ? 2 : s.hypothesis ? 1 : s.input ? 3 : 0;
            if (code && (status == 0 || code == 2)) status = code;
        }
    });

    auto* plot_cmd = app.add_subcommand("plot", "SVG rendering of a barcode");
    plot_cmd->add_option("barcode", file)->required();
    plot_cmd->add_option("--output", output, "SVG file (default: standard output)");
    plot_cmd->add_option("--title", title);
    plot_cmd->callback([&] {
        std::string svg = barcode_svg(parse_barcode(read_file(file)), title);
        if (output.empty())
            out << svg;
        else
            write_file(output, svg);
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : static_cast<int>(ErrorClass::Input);
    } catch (const Error& e) {
        rep.print(out, g.format == "machine");
        err << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    }
    rep.print(out, g.format == "machine");
    return status;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

} // namespace nov
