#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

// Monomial c4^i * c6^j * Delta^d in normal form (j in {0,1} after rewriting
// c6^2 = c4^3 - 1728*Delta). Its q-expansion is monic with leading exponent d,
// and for a fixed even weight the leading exponent determines the monomial.
struct MFMonomial {
    long i = 0;
    int j = 0;
    long d = 0;

    long weight() const noexcept { return 4 * i + 6 * j + 12 * d; }
    long lead_exponent() const noexcept { return d; }

    friend auto operator<=>(const MFMonomial& a, const MFMonomial& b) noexcept {
        return std::tie(a.d, a.j, a.i) <=> std::tie(b.d, b.j, b.i);
    }
    friend bool operator==(const MFMonomial&, const MFMonomial&) = default;
};

// The unique normal-form monomial of the given weight with leading exponent
// lead_d, when one exists.
std::optional<MFMonomial> monomial_of_weight(long weight, long lead_d);

// Largest leading exponent among monomials of the given weight; empty for odd
// weights (MF_k = 0 for odd k).
std::optional<long> max_lead_exponent(long weight);

// Homogeneous element of MF_*^Q in monomial normal form. The zero element
// still carries its weight.
class MFElement {
public:
    explicit MFElement(long weight, std::map<MFMonomial, Rational> coords = {});

    static MFElement zero(long weight) { return MFElement(weight); }
    static MFElement from_monomial(const MFMonomial& m, const Rational& c = Rational(1));
    static MFElement delta_power(long d, const Rational& c = Rational(1));

    long weight() const noexcept { return weight_; }
    const std::map<MFMonomial, Rational>& coords() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.empty(); }

    // Least leading exponent over the support; 0 for the zero element.
    long min_lead() const noexcept;

    bool operator==(const MFElement&) const = default;

private:
    long weight_;
    std::map<MFMonomial, Rational> coords_;
};

MFElement add(const MFElement& a, const MFElement& b);
MFElement scale(const Rational& c, const MFElement& a);
MFElement mul(const MFElement& a, const MFElement& b);

inline MFElement operator+(const MFElement& a, const MFElement& b) { return add(a, b); }
inline MFElement operator*(const MFElement& a, const MFElement& b) { return mul(a, b); }

// Term of a formal polynomial in c4, c6, Delta, Delta^-1: the c6 exponent may
// exceed 1, the Delta exponent may be negative.
struct FormalTerm {
    Rational coeff;
    long i = 0;
    long j = 0;
    long d = 0;

    long weight() const noexcept { return 4 * i + 6 * j + 12 * d; }
};

// Rewrites c6^2 -> c4^3 - 1728*Delta until every c6 exponent is 0 or 1 and
// collects like monomials. The input must be homogeneous in weight.
MFElement normalize(const std::vector<FormalTerm>& poly);

// q-expansion of a single normal-form monomial on the window
// [m.lead_exponent(), horizon).
QSeries expand_monomial(const MFMonomial& m, long horizon);

// q-expansion with `terms` determined coefficients from the element's least
// leading exponent.
QSeries expand(const MFElement& f, long terms);

// All weight-w monomials with d_min <= lead exponent <= d_max, ascending.
std::vector<MFMonomial> basis(long weight, long d_min, long d_max);

struct ReduceResult {
    std::map<MFMonomial, Rational> coords;
    QSeries remainder;

    bool is_member() const noexcept { return remainder.is_zero(); }
};

// Echelon elimination: sweeps exponents upward from the valuation and
// subtracts the unique weight-w monomial led by each exponent. The series is
// a member of MF_weight^Q (within the window) iff the remainder vanishes.
ReduceResult reduce(const QSeries& s, long weight);

struct ConstantTermEntry {
    MFMonomial monomial;
    Rational q0;
};

struct ConstantTermReport {
    long weight = 0;
    long max_pole = 0;
    bool pass = false;
    std::vector<ConstantTermEntry> entries;
};

// Exact q^0 coefficients of every weight-w basis monomial with pole order at
// most max_pole (plus the d = 0 monomial when one exists); passes iff all are
// zero.
ConstantTermReport constant_term_vanishing(long weight, long max_pole);

// Minimal positive multiplier a_{i,j,d} of a monomial inside the lattice of
// string-realizable Witten genera: 24/gcd(24,|d|) when i = j = 0 (with
// gcd(24,0) = 24), 2 when j = 1, 1 otherwise.
Int image_lattice_coefficient(long i, int j, long d);

struct LatticeCertEntry {
    MFMonomial monomial;
    Rational coeff;
    Int required;
    bool ok = false;
};

struct LatticeCertificate {
    bool contained = false;
    std::vector<LatticeCertEntry> entries;
};

// True iff every coordinate is an integer multiple of its lattice coefficient.
LatticeCertificate image_lattice_contains(const MFElement& f);

// True iff f = +-Delta^d.
bool is_unit(const MFElement& f);

std::string to_string(const MFMonomial& m);
std::string to_string(const MFElement& f);

// Parses the textual grammar "c4^i*c6^j*Delta^d" with integer or p/q
// coefficients, terms joined by +/-.
MFElement parse_mf_expression(std::string_view text);

}  // namespace qmf
