#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qmf/coset.hpp"
#include "qmf/mfring.hpp"

namespace qmf {

enum class WitnessKind { string_class, relative_witten, relative_dirac };

std::string to_string(WitnessKind kind);

// Bordism class recorded purely through its genus-level invariant: the Witten
// genus of a string class (a modular form), the relative Witten genus of a
// spin class with string boundary (a coset), or the relative Dirac index of a
// spin^c class with spin boundary (a rational). The provenance string records
// the geometric origin.
struct Witness {
    std::string name;
    long degree = 0;
    WitnessKind kind = WitnessKind::string_class;
    std::variant<MFElement, Coset, Rational> invariant;
    std::string provenance;

    const MFElement& witten_genus() const;
    const Coset& coset() const;
    const Rational& dirac_index() const;
};

// Per-kind coherence: relative Witten classes live in degrees divisible by 4
// with coset weight degree/2; string classes carry a genus of weight
// degree/2; relative Dirac classes live in degrees 2 mod 4 except for
// absolute-index entries (closed manifolds pushed into the relative group),
// which live in degrees divisible by 4.
void validate_witness(const Witness& w);

// The built-in witnesses, with coset representatives determined to `terms`
// coefficients.
class Catalog {
public:
    explicit Catalog(long terms = 80);

    const std::vector<Witness>& entries() const noexcept { return entries_; }
    long terms() const noexcept { return terms_; }

    bool contains(std::string_view name) const noexcept;
    const Witness& find(std::string_view name) const;
    void erase(std::string_view name);

private:
    long terms_;
    std::vector<Witness> entries_;
};

// String-class witness of degree 24d realizing the minimal positive multiple
// of Delta^d inside the Witten image lattice.
Witness image_realizer(long d);

// Module action on witnesses: a string class times a relative Witten class.
Witness product_witness(const Witness& s, const Witness& r);

struct DerivationStep {
    std::string statement;
    std::string justification;
};

struct Uspin76Derivation {
    Coset result;
    std::vector<DerivationStep> steps;
};

// Recomputes the degree-76 relative Witten genus from the catalog inputs:
// (1/24^3) * Wit(L24_STRING)^3 * 12 * Wit_rel(D4S3), with a step-by-step
// trace. The result must agree with the USPIN76 entry.
Uspin76Derivation derive_uspin76(const Catalog& catalog);

}  // namespace qmf
