#include "qmf/witness.hpp"

#include <algorithm>

namespace qmf {

std::string to_string(WitnessKind kind) {
    switch (kind) {
        case WitnessKind::string_class: return "STRING_CLASS";
        case WitnessKind::relative_witten: return "RELATIVE_WITTEN";
        case WitnessKind::relative_dirac: return "RELATIVE_DIRAC";
    }
    throw std::invalid_argument("to_string: unknown witness kind");
}

const MFElement& Witness::witten_genus() const {
    if (kind != WitnessKind::string_class)
        throw std::invalid_argument("witness " + name + " is not a string class");
    return std::get<MFElement>(invariant);
}

const Coset& Witness::coset() const {
    if (kind != WitnessKind::relative_witten)
        throw std::invalid_argument("witness " + name + " carries no relative Witten genus");
    return std::get<Coset>(invariant);
}

const Rational& Witness::dirac_index() const {
    if (kind != WitnessKind::relative_dirac)
        throw std::invalid_argument("witness " + name + " carries no Dirac index");
    return std::get<Rational>(invariant);
}

void validate_witness(const Witness& w) {
    switch (w.kind) {
        case WitnessKind::string_class: {
            if (w.witten_genus().weight() * 2 != w.degree)
                throw std::invalid_argument("witness " + w.name + ": genus weight " +
                                            std::to_string(w.witten_genus().weight()) +
                                            " does not match degree " + std::to_string(w.degree));
            return;
        }
        case WitnessKind::relative_witten: {
            if (w.degree % 4 != 0)
                throw std::invalid_argument("witness " + w.name +
                                            ": relative Witten degree must be divisible by 4");
            if (w.coset().weight() * 2 != w.degree)
                throw std::invalid_argument("witness " + w.name + ": coset weight " +
                                            std::to_string(w.coset().weight()) +
                                            " does not match degree " + std::to_string(w.degree));
            return;
        }
        case WitnessKind::relative_dirac: {
            (void)w.dirac_index();
            const long r = ((w.degree % 4) + 4) % 4;
            // r == 2: genuinely relative; r == 0: absolute index of a closed
            // manifold pushed into the relative group.
            if (r != 2 && r != 0)
                throw std::invalid_argument("witness " + w.name +
                                            ": Dirac degree must be even, got " +
                                            std::to_string(w.degree));
            return;
        }
    }
    throw std::invalid_argument("validate_witness: unknown kind");
}

Catalog::Catalog(long terms) : terms_(terms) {
    if (terms_ < 2) throw std::invalid_argument("Catalog: terms must be at least 2");

    const QSeries e2 = generator(GeneratorName::E2, terms_);
    const QSeries delta = generator(GeneratorName::Delta, terms_);

    entries_.push_back(Witness{
        "D2S1", 2, WitnessKind::relative_dirac, make_rational(1, 2),
        "disk D^2 with Lie-framed boundary S^1; [CP^1] = 2*[D^2, S^1_Lie] and "
        "Ind(CP^1) = 1, so the relative Dirac index is 1/2"});
    entries_.push_back(Witness{
        "CP1", 2, WitnessKind::relative_dirac, Rational(1),
        "closed CP^1 pushed into the relative spin^c/spin group; its Dirac index "
        "(Todd genus) is 1"});
    entries_.push_back(Witness{
        "BOTT8", 8, WitnessKind::relative_dirac, Rational(1),
        "closed 8-dimensional spin manifold (Bott manifold) with Dirac index 1; "
        "absolute index, used to shift degrees by 8"});
    entries_.push_back(Witness{
        "D4S3", 4, WitnessKind::relative_witten,
        Coset(2, scale(make_rational(1, 12), e2)),
        "disk D^4 with Lie-framed boundary S^3; [K3] = 24*[D^4, S^3_Lie] and "
        "Wit(K3) = 2*E2, so the relative Witten genus is E2/12 mod MF_2"});
    entries_.push_back(Witness{
        "K3", 4, WitnessKind::relative_witten, Coset(2, scale(Rational(2), e2)),
        "K3 surface pushed into the relative spin/string group; its Witten genus "
        "is 2*E2"});
    entries_.push_back(Witness{
        "U_ETA3", 4, WitnessKind::relative_witten, Coset(2, e2),
        "spin nullbordism of (S^1_Lie)^3; equals 12*[D^4, S^3_Lie] because "
        "[S^1_Lie]^3 = 12*[S^3_Lie], so the relative Witten genus is E2 mod MF_2"});
    entries_.push_back(Witness{
        "L24_STRING", 24, WitnessKind::string_class,
        MFElement::delta_power(1, Rational(24)),
        "24-dimensional string manifold realizing the Toda bracket "
        "<24, nu, kappa-bar>, with the nullbordism normalized so that the Witten "
        "genus is exactly 24*Delta"});
    entries_.push_back(Witness{
        "USPIN76", 76, WitnessKind::relative_witten,
        Coset(38, mul(e2, pow(delta, 3))),
        "spin nullbordism of (L25_STRING)^3 where L25_STRING realizes "
        "<eta, nu, kappa-bar>; 24^3 times this class equals [L24_STRING]^3 * "
        "12*[D^4, S^3_Lie], so the relative Witten genus is E2*Delta^3 mod MF_38"});

    for (const auto& w : entries_) validate_witness(w);
}

bool Catalog::contains(std::string_view name) const noexcept {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Witness& w) { return w.name == name; });
}

const Witness& Catalog::find(std::string_view name) const {
    for (const auto& w : entries_)
        if (w.name == name) return w;
    throw std::invalid_argument("catalog has no witness named '" + std::string(name) + "'");
}

void Catalog::erase(std::string_view name) {
    std::erase_if(entries_, [&](const Witness& w) { return w.name == name; });
}

Witness image_realizer(long d) {
    const Int a = image_lattice_coefficient(0, 0, d);
    return Witness{
        "realizer(" + std::to_string(d) + ")", 24 * d, WitnessKind::string_class,
        MFElement::delta_power(d, Rational(a)),
        "string manifold with Witten genus " + to_string(Rational(a)) + "*Delta^" +
            std::to_string(d) + ", the minimal positive multiple of Delta^" + std::to_string(d) +
            " in the Witten image lattice"};
}

Witness product_witness(const Witness& s, const Witness& r) {
    if (s.kind != WitnessKind::string_class)
        throw std::invalid_argument("product_witness: " + s.name + " is not a string class");
    if (r.kind != WitnessKind::relative_witten)
        throw std::invalid_argument("product_witness: " + r.name + " is not a relative Witten class");
    return Witness{s.name + "*" + r.name, s.degree + r.degree, WitnessKind::relative_witten,
                   mf_action(s.witten_genus(), r.coset()),
                   "module product of " + s.name + " and " + r.name +
                       "; the relative Witten genus is Wit(" + s.name + ") * Wit_rel(" + r.name +
                       ")"};
}

Uspin76Derivation derive_uspin76(const Catalog& catalog) {
    const Witness& l24 = catalog.find("L24_STRING");
    const Witness& d4s3 = catalog.find("D4S3");

    Uspin76Derivation out{Coset::zero(38, 0, 1), {}};

    out.steps.push_back(DerivationStep{
        "24^3 * [USPIN76] = [L24_STRING]^3 * 12*[D4S3] in the degree-76 relative group",
        "bordism identity relating the nullbordism of (L25_STRING)^3 to the "
        "cube of L24_STRING acting on the nullbordism of (S^1_Lie)^3"});

    const MFElement genus_cubed = mul(mul(l24.witten_genus(), l24.witten_genus()), l24.witten_genus());
    out.steps.push_back(DerivationStep{
        "Wit(L24_STRING)^3 = " + to_string(genus_cubed),
        "cube of the catalogued Witten genus " + to_string(l24.witten_genus())});

    const Coset twelve_d4s3 = coset_scale(Rational(12), d4s3.coset());
    out.steps.push_back(DerivationStep{
        "Wit_rel(12*[D4S3]) = 12 * (E2/12) = E2 mod MF_2",
        "rational linearity applied to the catalogued relative genus of D4S3"});

    out.result = coset_scale(make_rational(1, Int(24) * 24 * 24),
                             mf_action(genus_cubed, twelve_d4s3));
    out.steps.push_back(DerivationStep{
        "Wit_rel([USPIN76]) = (1/24^3) * " + to_string(genus_cubed) + " * E2 = E2*Delta^3 mod MF_38",
        "module action of the string class on the relative class, divided by 24^3"});

    return out;
}

}  // namespace qmf
