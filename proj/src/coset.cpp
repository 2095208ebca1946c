#include "qmf/coset.hpp"

namespace qmf {

Coset::Coset(long weight, QSeries rep, bool canonical)
    : weight_(weight), rep_(std::move(rep)), canonical_(canonical) {
    if (weight_ % 2 != 0)
        throw std::invalid_argument("Coset: weight must be even, got " + std::to_string(weight_));
}

Coset canonicalize(const Coset& c) {
    return Coset(c.weight(), reduce(c.rep(), c.weight()).remainder, true);
}

bool coset_equal(const Coset& a, const Coset& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("coset_equal: weight mismatch " + std::to_string(a.weight()) +
                                    " vs " + std::to_string(b.weight()));
    return reduce(sub(a.rep(), b.rep()), a.weight()).is_member();
}

Coset mf_action(const MFElement& f, const Coset& c) {
    const QSeries factor = expand(f, c.rep().window_length());
    return Coset(f.weight() + c.weight(), mul(factor, c.rep()));
}

Coset coset_scale(const Rational& r, const Coset& c) {
    return Coset(c.weight(), scale(r, c.rep()), c.known_canonical());
}

std::string to_string(const Coset& c) {
    return preview_string(c.rep()) + " mod MF_" + std::to_string(c.weight());
}

}  // namespace qmf
