#include "qmf/pairing.hpp"

#include <random>

namespace qmf {

PairingResult pair_sqft(const MFElement& phi, const Witness& w) {
    if (w.kind != WitnessKind::relative_witten)
        throw std::invalid_argument("pair_sqft: witness " + w.name + " is not a relative Witten class");
    const long d = -2 * phi.weight();
    if (d % 4 != 0)
        throw std::invalid_argument("pair_sqft: phi weight " + std::to_string(phi.weight()) +
                                    " does not sit in a degree divisible by 4");
    if (w.degree != d - 20)
        throw std::invalid_argument("pair_sqft: witness degree " + std::to_string(w.degree) +
                                    " does not match d - 20 = " + std::to_string(d - 20));
    const Coset& coset = w.coset();
    const long width = coset.rep().window_length();
    const QSeries delta = generator(GeneratorName::Delta, width);
    const QSeries phi_series = expand(phi, width);
    const QSeries integrand = scale(make_rational(1, 2), mul(mul(delta, phi_series), coset.rep()));
    if (integrand.horizon() <= 0)
        throw insufficient_precision("pair_sqft: integrand window ends at q^" +
                                     std::to_string(integrand.horizon()) +
                                     ", before the q^0 coefficient");
    const Rational value =
        integrand.valuation() > 0 ? Rational(0) : integrand.coefficient(0);
    return PairingResult{value, d, is_integer(value),
                         std::array<long, 3>{12, phi.weight(), coset.weight()}};
}

PairingResult pair_sqm(const Rational& x, const Witness& w) {
    if (w.kind != WitnessKind::relative_dirac)
        throw std::invalid_argument("pair_sqm: witness " + w.name + " is not a relative Dirac class");
    if (((w.degree % 4) + 4) % 4 != 2)
        throw std::invalid_argument("pair_sqm: witness degree " + std::to_string(w.degree) +
                                    " is not 2 mod 4");
    const Rational value = x * w.dirac_index();
    return PairingResult{value, w.degree + 2, is_integer(value), std::nullopt};
}

Witness perturb_witness_by_series(const Witness& w, const QSeries& offset) {
    Witness out = w;
    out.invariant = Coset(w.coset().weight(), add(w.coset().rep(), offset));
    return out;
}

Witness perturb_witness(const Witness& w, const MFElement& member) {
    if (member.weight() != w.coset().weight())
        throw std::invalid_argument("perturb_witness: member weight " +
                                    std::to_string(member.weight()) + " does not match coset weight " +
                                    std::to_string(w.coset().weight()));
    if (member.is_zero()) return w;
    const long horizon = w.coset().rep().horizon();
    return perturb_witness_by_series(w, expand(member, horizon - member.min_lead()));
}

WellDefinednessRecord well_definedness_check(const MFElement& phi, const Witness& w, long trials,
                                             std::uint64_t seed) {
    if (trials < 0) throw std::invalid_argument("well_definedness_check: negative trial count");
    WellDefinednessRecord record;
    record.trials = trials;
    record.base_value = pair_sqft(phi, w).value;
    record.pass = true;

    const long weight = w.coset().weight();
    const long d_top = *max_lead_exponent(weight);
    const auto monomials = basis(weight, d_top - 9, d_top);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    for (long t = 0; t < trials; ++t) {
        std::map<MFMonomial, Rational> coords;
        for (const auto& m : monomials) {
            const int c = coeff_dist(rng);
            if (c != 0) coords.emplace(m, Rational(c));
        }
        const MFElement member(weight, std::move(coords));
        const Rational perturbed = pair_sqft(phi, perturb_witness(w, member)).value;
        if (perturbed != record.base_value) {
            record.pass = false;
            record.counterexample = member;
            record.perturbed_value = perturbed;
            break;
        }
    }
    return record;
}

}  // namespace qmf
