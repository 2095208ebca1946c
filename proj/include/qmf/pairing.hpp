#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "qmf/witness.hpp"

namespace qmf {

struct PairingResult {
    Rational value;
    long d = 0;               // degree parameter: the pairing acts on degree -d
    bool integral = false;    // value has denominator 1
    // Factor weights {12, weight(phi), coset weight}; they always total 2.
    std::optional<std::array<long, 3>> weights;
};

// Secondary pairing in the string setting: the q^0 coefficient of
// (1/2) * Delta * phi * Wit_rel(w). Requires weight(phi) = -d/2 and
// w.degree = d - 20; the value does not depend on the choice of coset
// representative because every weight-2 form has vanishing constant term.
PairingResult pair_sqft(const MFElement& phi, const Witness& w);

// Warm-up pairing in the spin^c setting: x times the relative Dirac index.
PairingResult pair_sqm(const Rational& x, const Witness& w);

struct WellDefinednessRecord {
    bool pass = false;
    long trials = 0;
    Rational base_value;
    // Populated on failure with the perturbing member and the value it gave.
    std::optional<MFElement> counterexample;
    std::optional<Rational> perturbed_value;
};

// Perturbs the witness representative by `trials` seeded random integer
// combinations of weight-matched basis monomials and checks that the pairing
// value is exactly unchanged each time.
WellDefinednessRecord well_definedness_check(const MFElement& phi, const Witness& w, long trials,
                                             std::uint64_t seed);

// The witness with its coset representative shifted by the expansion of a
// weight-matched element; the main ingredient of the perturbation tests.
Witness perturb_witness(const Witness& w, const MFElement& member);

// Like perturb_witness but shifts by an arbitrary series (used for the
// non-member negative control).
Witness perturb_witness_by_series(const Witness& w, const QSeries& offset);

}  // namespace qmf
