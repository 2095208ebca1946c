#pragma once

#include <map>
#include <string>

#include "qmf/errors.hpp"
#include "qmf/rational.hpp"

namespace qmf {

// Truncated Laurent series with exact rational coefficients.
//
// A QSeries knows its coefficients exactly on the window [valuation, horizon):
// stored entries are the nonzero ones, absent exponents inside the window are
// exact zeros, and every exponent below the valuation is an exact zero as
// well (the valuation is a proven lower bound on the support). Exponents at
// or above the horizon are undetermined; reading them is an error.
class QSeries {
public:
    QSeries(long valuation, long horizon, std::map<long, Rational> coeffs = {});

    static QSeries zero(long valuation, long horizon);
    static QSeries one(long horizon);  // 1 on [0, horizon)
    static QSeries monomial(long exponent, const Rational& c, long horizon);

    long valuation() const noexcept { return valuation_; }
    long horizon() const noexcept { return horizon_; }
    long window_length() const noexcept { return horizon_ - valuation_; }
    const std::map<long, Rational>& terms() const noexcept { return coeffs_; }

    // Exact coefficient of q^n; throws insufficient_precision outside
    // [valuation, horizon).
    const Rational& coefficient(long n) const;

    // Identically zero on the window.
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Same series on the window [lo, hi). Widening below the valuation fills
    // exact zeros; raising the valuation past a stored nonzero coefficient is
    // an error, as is hi > horizon.
    QSeries restricted(long lo, long hi) const;

    bool operator==(const QSeries& other) const = default;

private:
    long valuation_;
    long horizon_;
    std::map<long, Rational> coeffs_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries scale(const Rational& c, const QSeries& a);

// Multiplicative inverse; requires a nonzero coefficient at the valuation.
// The result satisfies mul(a, invert(a)) == 1 on the common window.
QSeries invert(const QSeries& a);

// a^e for any integer e (negative exponents go through invert). The window
// length of the result equals the window length of a.
QSeries pow(const QSeries& a, long e);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

enum class GeneratorName { C4, C6, Delta, DeltaInv, E2 };

// q-expansion with `terms` determined coefficients starting at the generator's
// valuation (0 for C4, C6, E2; 1 for Delta; -1 for DeltaInv).
QSeries generator(GeneratorName name, long terms);

// "q - 24*q^2 + 252*q^3", "q^-1 + 24 + 324*q", "0".
std::string to_string(const QSeries& s);

// First few stored terms followed by "+ O(q^k)" when truncated.
std::string preview_string(const QSeries& s, std::size_t max_terms = 6);

}  // namespace qmf
