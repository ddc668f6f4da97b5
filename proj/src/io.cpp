#include "novikov/io.hpp"

#include "novikov/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace nov {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("malformed document: ") + e.what());
    }
}

const json& field(const json& obj, const std::string& key, const std::string& at) {
    if (!obj.is_object()) throw FormatError(at + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(at + "/" + key + ": missing");
    return *it;
}

std::string text_of(const json& v, const std::string& at) {
    if (!v.is_string()) throw FormatError(at + ": expected a string literal");
    return v.get<std::string>();
}

Exponent rational_at(const json& v, const std::string& at) {
    try {
        return parse_rational(text_of(v, at));
    } catch (const FormatError& e) {
        throw FormatError(at + ": " + e.what());
    }
}

int integer_at(const json& v, const std::string& at) {
    if (!v.is_number_integer()) throw FormatError(at + ": expected an integer");
    return v.get<int>();
}

const json& array_at(const json& v, const std::string& at) {
    if (!v.is_array()) throw FormatError(at + ": expected an array");
    return v;
}

Matrix parse_entries(const json& list, const std::map<std::string, size_t>& index, ExtExponent precision,
                     const std::string& at) {
    const size_t n = index.size();
    Matrix m(n, n);
    array_at(list, at);
    for (size_t k = 0; k < list.size(); ++k) {
        const std::string here = at + "/" + std::to_string(k);
        const json& e = list[k];
        auto name = [&](const char* key) {
            std::string s = text_of(field(e, key, here), here + "/" + key);
            auto it = index.find(s);
            if (it == index.end()) throw FormatError(here + "/" + key + ": unknown generator '" + s + "'");
            return it->second;
        };
        size_t from = name("from"), to = name("to");
        const json& coeff = array_at(field(e, "coeff", here), here + "/coeff");
        std::vector<Exponent> terms;
        for (size_t t = 0; t < coeff.size(); ++t)
            terms.push_back(rational_at(coeff[t], here + "/coeff/" + std::to_string(t)));
        m(to, from) += NovikovScalar::from_terms(terms, precision);
    }
    return m;
}

json entries_of(const Matrix& m, const FilteredSpace& s) {
    json list = json::array();
    for (size_t j = 0; j < m.cols(); ++j)
        for (size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j).is_zero()) continue;
            json coeff = json::array();
            for (const auto& t : m(i, j).terms()) coeff.push_back(format_rational(t));
            list.push_back(json{{"from", s.names[j]}, {"to", s.names[i]}, {"coeff", coeff}});
        }
    return list;
}

json bars_json(const Barcode& b) {
    json bars = json::array();
    for (const auto& bar : b.bars) {
        json e{{"birth", format_rational(bar.birth)}, {"length", format_ext(bar.length)},
               {"multiplicity", bar.multiplicity}};
        if (bar.degree) e["degree"] = *bar.degree;
        bars.push_back(e);
    }
    return json{{"bars", bars}};
}

Barcode barcode_from(const json& doc, const std::string& at) {
    Barcode b;
    const json& bars = array_at(field(doc, "bars", at), at + "/bars");
    for (size_t k = 0; k < bars.size(); ++k) {
        const std::string here = at + "/bars/" + std::to_string(k);
        Bar bar;
        bar.birth = rational_at(field(bars[k], "birth", here), here + "/birth");
        std::string len = text_of(field(bars[k], "length", here), here + "/length");
        if (len != "inf") {
            bar.length = rational_at(bars[k]["length"], here + "/length");
            if (*bar.length <= 0) throw FormatError(here + "/length: bar lengths must be positive");
        }
        if (bars[k].contains("multiplicity")) {
            bar.multiplicity = integer_at(bars[k]["multiplicity"], here + "/multiplicity");
            if (bar.multiplicity < 1) throw FormatError(here + "/multiplicity: must be at least 1");
        }
        if (bars[k].contains("degree")) bar.degree = integer_at(bars[k]["degree"], here + "/degree");
        b.bars.push_back(bar);
    }
    b.normalize();
    return b;
}

} // namespace

ComplexDocument parse_complex(const std::string& text, bool check, const ExtExponent& precision) {
    json doc = parse_json(text);
    ComplexDocument out;
    FilteredComplex& c = out.complex;
    if (doc.contains("precision")) c.precision = rational_at(doc["precision"], "/precision");
    if (precision) c.precision = precision;
    if (c.precision && *c.precision <= 0) throw FormatError("/precision: must be positive");
    const json& gens = array_at(field(doc, "generators", ""), "/generators");
    std::map<std::string, size_t> index;
    bool graded = false, ungraded = false;
    std::vector<int> degrees;
    for (size_t k = 0; k < gens.size(); ++k) {
        const std::string here = "/generators/" + std::to_string(k);
        std::string name = text_of(field(gens[k], "name", here), here + "/name");
        if (name.empty()) throw FormatError(here + "/name: empty name");
        if (!index.emplace(name, k).second) throw FormatError(here + "/name: duplicate name '" + name + "'");
        c.space.names.push_back(name);
        c.space.filtration.push_back(rational_at(field(gens[k], "filtration", here), here + "/filtration"));
        if (gens[k].contains("degree")) {
            graded = true;
            degrees.push_back(integer_at(gens[k]["degree"], here + "/degree"));
        } else {
            ungraded = true;
        }
    }
    if (graded && ungraded) throw FormatError("/generators: degrees must be given for all generators or none");
    if (graded) c.space.grading = degrees;
    c.d = doc.contains("differential") ? parse_entries(doc["differential"], index, c.precision, "/differential")
                                       : Matrix(gens.size(), gens.size());
    if (doc.contains("maps")) {
        const json& maps = doc["maps"];
        if (!maps.is_object()) throw FormatError("/maps: expected an object of named entry lists");
        for (auto it = maps.begin(); it != maps.end(); ++it)
            out.maps[it.key()] = parse_entries(it.value(), index, c.precision, "/maps/" + it.key());
    }
    if (check) require_valid(c);
    return out;
}

std::string serialize_complex(const FilteredComplex& c, const std::map<std::string, Matrix>& maps) {
    json doc;
    if (c.precision) doc["precision"] = format_rational(*c.precision);
    json gens = json::array();
    for (size_t k = 0; k < c.dim(); ++k) {
        json g{{"name", c.space.names[k]}};
        if (c.space.grading) g["degree"] = (*c.space.grading)[k];
        g["filtration"] = format_rational(c.space.filtration[k]);
        gens.push_back(g);
    }
    doc["generators"] = gens;
    doc["differential"] = entries_of(c.d, c.space);
    if (!maps.empty()) {
        json m = json::object();
        for (const auto& [name, mat] : maps) m[name] = entries_of(mat, c.space);
        doc["maps"] = m;
    }
    return doc.dump(2) + "\n";
}

Barcode parse_barcode(const std::string& text) { return barcode_from(parse_json(text), ""); }

std::string serialize_barcode(const Barcode& b) { return bars_json(b).dump(2) + "\n"; }

PeriodicBarcode parse_periodic(const std::string& text) {
    json doc = parse_json(text);
    PeriodicBarcode p;
    p.period_action = rational_at(field(doc, "period_action", ""), "/period_action");
    int idx = integer_at(field(doc, "period_index", ""), "/period_index");
    if (idx < 1) throw FormatError("/period_index: must be positive");
    p.period_index = static_cast<size_t>(idx);
    p.kappa = doc.contains("kappa") ? rational_at(doc["kappa"], "/kappa") : Exponent(p.period_action / idx);
    const json& window = array_at(field(doc, "window", ""), "/window");
    for (size_t k = 0; k < window.size(); ++k) p.window.push_back(barcode_from(window[k], "/window/" + std::to_string(k)));
    return p;
}

std::string serialize_periodic(const PeriodicBarcode& p) {
    json doc{{"period_action", format_rational(p.period_action)},
             {"period_index", p.period_index},
             {"kappa", format_rational(p.kappa)}};
    json window = json::array();
    for (const auto& b : p.window) window.push_back(bars_json(b));
    doc["window"] = window;
    return doc.dump(2) + "\n";
}

std::string serialize_matching(const Barcode& b1, const Barcode& b2, const Matching& m) {
    auto e1 = b1.expanded(), e2 = b2.expanded();
    auto bar = [](const Bar& b) { return json::array({format_rational(b.birth), format_ext(b.length)}); };
    json pairs = json::array(), u1 = json::array(), u2 = json::array();
    for (auto [i, j] : m.pairs) pairs.push_back(json{{"first", bar(e1[i])}, {"second", bar(e2[j])}});
    for (size_t i : m.unmatched1) u1.push_back(bar(e1[i]));
    for (size_t j : m.unmatched2) u2.push_back(bar(e2[j]));
    json doc{{"delta", format_ext(m.delta)}, {"pairs", pairs}, {"unmatched_first", u1}, {"unmatched_second", u2}};
    return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write '" + path + "'");
    out << text;
}

} // namespace nov
