#include "qmf/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <vector>

namespace qmf {

namespace {

std::string window_string(long lo, long hi) {
    std::ostringstream os;
    os << "[" << lo << ", " << hi << ")";
    return os.str();
}

}  // namespace

QSeries::QSeries(long valuation, long horizon, std::map<long, Rational> coeffs)
    : valuation_(valuation), horizon_(horizon), coeffs_(std::move(coeffs)) {
    if (valuation_ >= horizon_)
        throw std::invalid_argument("QSeries: empty window " + window_string(valuation_, horizon_));
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first < valuation_ || it->first >= horizon_)
            throw std::invalid_argument("QSeries: exponent " + std::to_string(it->first) +
                                        " outside window " + window_string(valuation_, horizon_));
        if (it->second == 0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

QSeries QSeries::zero(long valuation, long horizon) { return QSeries(valuation, horizon); }

QSeries QSeries::one(long horizon) { return monomial(0, Rational(1), horizon); }

QSeries QSeries::monomial(long exponent, const Rational& c, long horizon) {
    std::map<long, Rational> m;
    if (c != 0) m.emplace(exponent, c);
    return QSeries(exponent, horizon, std::move(m));
}

const Rational& QSeries::coefficient(long n) const {
    if (n < valuation_ || n >= horizon_)
        throw insufficient_precision("coefficient q^" + std::to_string(n) +
                                     " is outside the determined window " +
                                     window_string(valuation_, horizon_));
    static const Rational kZero(0);
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? kZero : it->second;
}

QSeries QSeries::restricted(long lo, long hi) const {
    if (lo >= hi) throw std::invalid_argument("restricted: empty window " + window_string(lo, hi));
    if (hi > horizon_)
        throw insufficient_precision("restricted: window " + window_string(lo, hi) +
                                     " exceeds the determined window " +
                                     window_string(valuation_, horizon_));
    std::map<long, Rational> kept;
    for (const auto& [n, c] : coeffs_) {
        if (n < lo)
            throw std::invalid_argument("restricted: nonzero coefficient at q^" +
                                        std::to_string(n) + " below the requested valuation " +
                                        std::to_string(lo));
        if (n < hi) kept.emplace(n, c);
    }
    return QSeries(lo, hi, std::move(kept));
}

QSeries add(const QSeries& a, const QSeries& b) {
    const long lo = std::min(a.valuation(), b.valuation());
    const long hi = std::min(a.horizon(), b.horizon());
    if (hi <= lo)
        throw insufficient_precision("add: result window " + window_string(lo, hi) + " is empty");
    std::map<long, Rational> sum;
    for (const auto& [n, c] : a.terms())
        if (n < hi) sum[n] += c;
    for (const auto& [n, c] : b.terms())
        if (n < hi) sum[n] += c;
    return QSeries(lo, hi, std::move(sum));
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, scale(Rational(-1), b)); }

QSeries mul(const QSeries& a, const QSeries& b) {
    const long lo = a.valuation() + b.valuation();
    const long hi = std::min(a.horizon() + b.valuation(), b.horizon() + a.valuation());
    if (hi <= lo)
        throw insufficient_precision("mul: result window " + window_string(lo, hi) + " is empty");
    std::map<long, Rational> prod;
    for (const auto& [i, ci] : a.terms()) {
        for (const auto& [j, cj] : b.terms()) {
            const long n = i + j;
            if (n < hi) prod[n] += ci * cj;
        }
    }
    return QSeries(lo, hi, std::move(prod));
}

QSeries scale(const Rational& c, const QSeries& a) {
    std::map<long, Rational> out;
    if (c != 0)
        for (const auto& [n, cn] : a.terms()) out.emplace(n, c * cn);
    return QSeries(a.valuation(), a.horizon(), std::move(out));
}

QSeries invert(const QSeries& a) {
    const Rational& lead = a.coefficient(a.valuation());
    if (lead == 0)
        throw not_invertible("invert: zero coefficient at the valuation q^" +
                             std::to_string(a.valuation()));
    const long width = a.window_length();
    const long bv = -a.valuation();
    // b[k] is the coefficient of q^{bv+k}; back-substitution from a * b = 1.
    std::vector<Rational> b(static_cast<std::size_t>(width));
    b[0] = Rational(1) / lead;
    for (long k = 1; k < width; ++k) {
        Rational s(0);
        for (long t = 1; t <= k; ++t) {
            auto it = a.terms().find(a.valuation() + t);
            if (it != a.terms().end()) s += it->second * b[static_cast<std::size_t>(k - t)];
        }
        b[static_cast<std::size_t>(k)] = -s / lead;
    }
    std::map<long, Rational> out;
    for (long k = 0; k < width; ++k)
        if (b[static_cast<std::size_t>(k)] != 0) out.emplace(bv + k, b[static_cast<std::size_t>(k)]);
    return QSeries(bv, bv + width, std::move(out));
}

QSeries pow(const QSeries& a, long e) {
    if (e < 0) return pow(invert(a), -e);
    if (e == 0) return QSeries::one(a.window_length());
    QSeries acc = a;
    long bit = 1;
    while (bit * 2 <= e) bit *= 2;
    for (bit /= 2; bit > 0; bit /= 2) {
        acc = mul(acc, acc);
        if (e & bit) acc = mul(acc, a);
    }
    return acc;
}

namespace {

// sigma_p(n) for n in [0, count); entry 0 unused.
std::vector<Int> divisor_sigma_table(long p, long count) {
    std::vector<Int> sig(static_cast<std::size_t>(std::max(count, 1L)), Int(0));
    for (long d = 1; d < count; ++d) {
        Int dp = 1;
        for (long k = 0; k < p; ++k) dp *= d;
        for (long m = d; m < count; m += d) sig[static_cast<std::size_t>(m)] += dp;
    }
    return sig;
}

QSeries eisenstein(long weight_power, const Int& factor, long terms) {
    const auto sig = divisor_sigma_table(weight_power, terms);
    std::map<long, Rational> coeffs;
    coeffs.emplace(0, Rational(1));
    for (long n = 1; n < terms; ++n) coeffs.emplace(n, Rational(factor * sig[static_cast<std::size_t>(n)]));
    return QSeries(0, terms, std::move(coeffs));
}

QSeries generator_uncached(GeneratorName name, long terms) {
    switch (name) {
        case GeneratorName::C4:
            return eisenstein(3, Int(240), terms);
        case GeneratorName::C6:
            return eisenstein(5, Int(-504), terms);
        case GeneratorName::E2:
            return eisenstein(1, Int(-24), terms);
        case GeneratorName::Delta: {
            const QSeries c4 = generator(GeneratorName::C4, terms + 1);
            const QSeries c6 = generator(GeneratorName::C6, terms + 1);
            const QSeries numer = sub(pow(c4, 3), pow(c6, 2));
            return scale(make_rational(1, 1728), numer).restricted(1, terms + 1);
        }
        case GeneratorName::DeltaInv:
            return invert(generator(GeneratorName::Delta, terms));
    }
    throw std::invalid_argument("generator: unknown name");
}

}  // namespace

QSeries generator(GeneratorName name, long terms) {
    if (terms <= 0) throw std::invalid_argument("generator: terms must be positive");
    static std::mutex cache_mutex;
    static std::map<std::pair<int, long>, QSeries> cache;
    const std::pair<int, long> key{static_cast<int>(name), terms};
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QSeries result = generator_uncached(name, terms);
    std::scoped_lock lock(cache_mutex);
    return cache.try_emplace(key, std::move(result)).first->second;
}

namespace {

void append_term(std::string& out, long n, const Rational& c, bool first) {
    const bool negative = c < 0;
    if (first) {
        if (negative) out += "-";
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? Rational(-c) : c;
    const bool unit = (mag == 1) && n != 0;
    if (!unit) out += to_string(mag);
    if (n != 0) {
        if (!unit) out += "*";
        out += (n == 1) ? "q" : "q^" + std::to_string(n);
    }
}

}  // namespace

std::string to_string(const QSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [n, c] : s.terms()) {
        append_term(out, n, c, first);
        first = false;
    }
    return out;
}

std::string preview_string(const QSeries& s, std::size_t max_terms) {
    if (s.is_zero()) return "0";
    std::string out;
    std::size_t shown = 0;
    long last = s.valuation();
    for (const auto& [n, c] : s.terms()) {
        if (shown == max_terms) break;
        append_term(out, n, c, shown == 0);
        ++shown;
        last = n;
    }
    if (shown < s.terms().size()) out += " + O(q^" + std::to_string(last + 1) + ")";
    return out;
}

}  // namespace qmf
