#pragma once

#include "qmf/mfring.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

// Element of Q((q)) / MF_w^Q: a representative series together with the
// weight of the modular forms being quotiented out. Two cosets of equal
// weight agree iff the difference of their representatives reduces to zero.
class Coset {
public:
    Coset(long weight, QSeries rep, bool canonical = false);

    static Coset zero(long weight, long lo, long hi) { return Coset(weight, QSeries::zero(lo, hi)); }

    long weight() const noexcept { return weight_; }
    const QSeries& rep() const noexcept { return rep_; }

    // The representative is known to be the canonical one (set by
    // canonicalize and preserved under scaling).
    bool known_canonical() const noexcept { return canonical_; }

private:
    long weight_;
    QSeries rep_;
    bool canonical_;
};

// The unique representative with zero coefficient at every weight-w basis
// leading exponent inside the window; idempotent.
Coset canonicalize(const Coset& c);

bool coset_equal(const Coset& a, const Coset& b);

// Module action of MF on the quotient: well-defined because
// MF_u * MF_w is contained in MF_{u+w}.
Coset mf_action(const MFElement& f, const Coset& c);

Coset coset_scale(const Rational& r, const Coset& c);

std::string to_string(const Coset& c);

}  // namespace qmf
