#include "novikov/cross.hpp"

#include "novikov/errors.hpp"
#include "novikov/filtered.hpp"

#include <algorithm>

namespace nov {

Family parse_family(const std::string& name) {
    if (name == "rpn") return Family::RPn;
    if (name == "cpn") return Family::CPn;
    if (name == "hpn") return Family::HPn;
    if (name == "sn") return Family::Sn;
    throw FormatError("unknown family '" + name + "' (expected rpn, cpn, hpn or sn)");
}

std::string family_name(Family f) {
    switch (f) {
    case Family::RPn: return "rpn";
    case Family::CPn: return "cpn";
    case Family::HPn: return "hpn";
    case Family::Sn: return "sn";
    }
    return "?";
}

CrossRing cross_ring(Family family, int n) {
    if (n < 1) throw HypothesisFailure("n must be at least 1");
    CrossRing r;
    r.family = family;
    r.n = n;
    switch (family) {
    case Family::RPn: r.n_l = n; r.big_n = n + 1; break;
    case Family::CPn: r.n_l = 2 * n; r.big_n = 2 * n + 2; break;
    case Family::HPn: r.n_l = 4 * n; r.big_n = 4 * n + 4; break;
    case Family::Sn: r.n_l = n; r.big_n = 2 * n; break;
    }
    r.degree = family == Family::Sn ? 1 : n;
    r.c = ratio(r.n_l, r.big_n);
    r.a_l = ratio(1, 2);
    r.kappa = r.a_l / r.big_n;
    return r;
}

Exponent SpectralFiltration::level(long j) const {
    const long b = ring.basis_size();
    return values[j % b] - ring.a_l * Exponent(j / b);
}

namespace {

void check_shape(const SpectralFiltration& f) {
    if (f.values.size() != static_cast<size_t>(f.ring.basis_size()))
        throw FormatError("filtration has " + std::to_string(f.values.size()) + " values, ring needs " +
                          std::to_string(f.ring.basis_size()));
}

void check_nonneg(const SpectralFiltration& f) {
    if (!f.nonneg_mode) return;
    for (long j = 0; j < f.ring.basis_size(); ++j) {
        Exponent diff = f.level(j) - f.level(j + 1);
        if (diff < 0)
            throw NonFiltered("l(a^" + std::to_string(j) + ") - l(a^" + std::to_string(j + 1) + ") = " +
                              format_rational(diff) + " is negative");
    }
}

} // namespace

LengthSpectrum mult_spectrum(const SpectralFiltration& f, int k) {
    check_shape(f);
    if (k < 0) throw HypothesisFailure("power must be nonnegative");
    check_nonneg(f);
    LengthSpectrum s;
    for (long j = 0; j < f.ring.basis_size(); ++j) s.finite.push_back(f.level(j) - f.level(j + k));
    std::sort(s.finite.begin(), s.finite.end());
    return s;
}

std::vector<Exponent> mult_spectrum_generic(const SpectralFiltration& f, int k) {
    check_shape(f);
    const size_t b = f.ring.basis_size();
    FilteredSpace space;
    for (size_t j = 0; j < b; ++j) {
        space.names.push_back("a^" + std::to_string(j));
        space.filtration.push_back(f.values[j]);
    }
    // a^j -> a^{j+k} = q^s a^t with q = T^{A_L}.
    Matrix m(b, b);
    for (size_t j = 0; j < b; ++j) {
        size_t t = (j + k) % b, s = (j + k) / b;
        m(t, j) = NovikovScalar::monomial(f.ring.a_l * Exponent(static_cast<long>(s)));
    }
    // Multiplication can raise the filtration when values are not nonnegative;
    // lower the target filtration by the excess, then add it back.
    ExtExponent shift = filtration_shift(FilteredMap{space, space, m});
    if (!shift || *shift >= 0) return uz_decompose(FilteredMap{space, space, m}).values();
    FilteredSpace target = space;
    for (auto& v : target.filtration) v += *shift;
    std::vector<Exponent> values = uz_decompose(FilteredMap{space, target, m}).values();
    for (auto& v : values) v += *shift;
    return values;
}

RootBoundReport check_root_of_unity_bounds(const SpectralFiltration& f, int m, int k) {
    check_shape(f);
    const CrossRing& ring = f.ring;
    const long b = ring.basis_size();
    if (m < 2) throw HypothesisFailure("m must be at least 2");
    if (k < 1) throw HypothesisFailure("codegree must be positive");
    if ((static_cast<long>(k) * b) % ring.big_n != 0)
        throw HypothesisFailure("codegree " + std::to_string(k) + " is not a power of a in this ring");
    RootBoundReport rep;
    rep.power = static_cast<int>(static_cast<long>(k) * b / ring.big_n);
    if (rep.power < 1 || rep.power > ring.degree)
        throw HypothesisFailure("codegree " + std::to_string(k) + " gives a^" + std::to_string(rep.power) +
                                ", outside the power basis");
    if ((static_cast<long>(rep.power) * m) % b != 0)
        throw HypothesisFailure("(a^" + std::to_string(rep.power) + ")^" + std::to_string(m) +
                                " is not a power of q");
    if (!f.nonneg_mode) throw HypothesisFailure("root-of-unity bounds need nonneg mode");
    check_nonneg(f);

    const long p = rep.power;
    rep.telescoped = ratio(static_cast<long>(m) * k, ring.big_n) * ring.a_l;
    for (long x = 0; x < b; ++x) {
        Exponent sum = 0;
        for (long j = 0; j < m; ++j) sum += f.level(x + j * p) - f.level(x + (j + 1) * p);
        rep.sums.push_back(sum);
        if (sum != rep.telescoped)
            throw AssertionFailure("telescoping sum for a^" + std::to_string(x) + " is " + format_rational(sum) +
                                   ", expected " + format_rational(rep.telescoped));
    }
    rep.spectrum = mult_spectrum(f, rep.power).finite;
    if (rep.spectrum.size() != static_cast<size_t>(b))
        throw AssertionFailure("multiplication by a root of unity must have full rank");
    rep.top = rep.spectrum.back();
    rep.top_bound = rep.telescoped;
    rep.index = static_cast<size_t>((b + m - 1) / m);
    rep.at_index = rep.spectrum[rep.index - 1];
    rep.index_bound = ratio(k, ring.big_n) * ring.a_l;
    if (rep.top > rep.top_bound)
        throw AssertionFailure("beta_B = " + format_rational(rep.top) + " exceeds " + format_rational(rep.top_bound));
    if (rep.at_index > rep.index_bound)
        throw AssertionFailure("beta_" + std::to_string(rep.index) + " = " + format_rational(rep.at_index) +
                               " exceeds " + format_rational(rep.index_bound));
    return rep;
}

Exponent gamma_from_filtration(const SpectralFiltration& f) {
    const int pt = f.ring.point_power();
    LengthSpectrum s = mult_spectrum(f, pt);
    Exponent direct = f.level(0) - f.level(pt);
    for (long x = 1; x < f.ring.basis_size(); ++x) direct = std::min<Exponent>(direct, f.level(x) - f.level(x + pt));
    if (direct != s.finite.front())
        throw AssertionFailure("beta_1 " + format_rational(s.finite.front()) + " differs from min_x l(x) - l(pt x) = " +
                               format_rational(direct));
    return s.finite.front();
}

CrossConstants cross_constants(const CrossRing& ring) {
    CrossConstants k;
    const Exponent& c = ring.c;
    k.c = c;
    k.gamma_bound = (1 + c) * c / (2 * (1 - c));
    k.beta_bound = c / (2 * (1 - c));
    k.big_c = (1 + c) * c / (1 - c);
    k.s_star = (1 - c) / (1 + c);
    return k;
}

Exponent product_bound(const std::vector<CrossRing>& rings, const Exponent& beta) {
    if (rings.empty()) throw HypothesisFailure("product bound needs at least one factor");
    if (beta < 0) throw HypothesisFailure("beta must be nonnegative");
    Exponent sum = 0, top = rings.front().c;
    for (const auto& r : rings) {
        if (r.big_n != rings.front().big_n)
            throw MismatchedMaslov("minimal Maslov numbers " + std::to_string(rings.front().big_n) + " and " +
                                   std::to_string(r.big_n) + " differ");
        sum += r.c;
        top = std::max(top, r.c);
    }
    return sum / (1 - top) * (rings.front().a_l + beta);
}

} // namespace nov
