#include "qmf/mfring.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>

namespace qmf {

std::optional<MFMonomial> monomial_of_weight(long weight, long lead_d) {
    if (weight % 2 != 0) return std::nullopt;
    const long rem = weight - 12 * lead_d;
    // 12d = 0 mod 4, so rem mod 4 picks the c6 exponent.
    long r4 = rem % 4;
    if (r4 < 0) r4 += 4;
    const int j = (r4 == 0) ? 0 : 1;
    const long numer = rem - 6 * j;
    if (numer < 0 || numer % 4 != 0) return std::nullopt;
    return MFMonomial{numer / 4, j, lead_d};
}

std::optional<long> max_lead_exponent(long weight) {
    if (weight % 2 != 0) return std::nullopt;
    for (long d = weight / 12 + 1;; --d) {
        if (monomial_of_weight(weight, d)) return d;
    }
}

MFElement::MFElement(long weight, std::map<MFMonomial, Rational> coords)
    : weight_(weight), coords_(std::move(coords)) {
    for (auto it = coords_.begin(); it != coords_.end();) {
        if (it->first.i < 0 || (it->first.j != 0 && it->first.j != 1))
            throw std::invalid_argument("MFElement: monomial not in normal form");
        if (it->first.weight() != weight_)
            throw std::invalid_argument("MFElement: monomial of weight " +
                                        std::to_string(it->first.weight()) +
                                        " in an element of weight " + std::to_string(weight_));
        if (it->second == 0)
            it = coords_.erase(it);
        else
            ++it;
    }
}

MFElement MFElement::from_monomial(const MFMonomial& m, const Rational& c) {
    std::map<MFMonomial, Rational> coords;
    if (c != 0) coords.emplace(m, c);
    return MFElement(m.weight(), std::move(coords));
}

MFElement MFElement::delta_power(long d, const Rational& c) {
    return from_monomial(MFMonomial{0, 0, d}, c);
}

long MFElement::min_lead() const noexcept {
    return coords_.empty() ? 0 : coords_.begin()->first.d;
}

MFElement add(const MFElement& a, const MFElement& b) {
    if (a.weight() != b.weight())
        throw std::invalid_argument("add: mixed weights " + std::to_string(a.weight()) + " and " +
                                    std::to_string(b.weight()));
    std::map<MFMonomial, Rational> sum = a.coords();
    for (const auto& [m, c] : b.coords()) sum[m] += c;
    return MFElement(a.weight(), std::move(sum));
}

MFElement scale(const Rational& c, const MFElement& a) {
    std::map<MFMonomial, Rational> out;
    if (c != 0)
        for (const auto& [m, cm] : a.coords()) out.emplace(m, c * cm);
    return MFElement(a.weight(), std::move(out));
}

MFElement mul(const MFElement& a, const MFElement& b) {
    std::vector<FormalTerm> prod;
    for (const auto& [ma, ca] : a.coords())
        for (const auto& [mb, cb] : b.coords())
            prod.push_back(FormalTerm{ca * cb, ma.i + mb.i, static_cast<long>(ma.j + mb.j),
                                      ma.d + mb.d});
    if (prod.empty()) return MFElement::zero(a.weight() + b.weight());
    return normalize(prod);
}

MFElement normalize(const std::vector<FormalTerm>& poly) {
    if (poly.empty()) return MFElement::zero(0);
    const long weight = poly.front().weight();
    for (const auto& t : poly) {
        if (t.i < 0 || t.j < 0)
            throw std::invalid_argument("normalize: negative c4 or c6 exponent");
        if (t.weight() != weight)
            throw std::invalid_argument("normalize: mixed weights " + std::to_string(weight) +
                                        " and " + std::to_string(t.weight()));
    }
    std::map<MFMonomial, Rational> coords;
    std::deque<FormalTerm> work(poly.begin(), poly.end());
    while (!work.empty()) {
        FormalTerm t = work.front();
        work.pop_front();
        if (t.coeff == 0) continue;
        if (t.j >= 2) {
            // c6^2 = c4^3 - 1728*Delta
            work.push_back(FormalTerm{t.coeff, t.i + 3, t.j - 2, t.d});
            work.push_back(FormalTerm{t.coeff * -1728, t.i, t.j - 2, t.d + 1});
            continue;
        }
        coords[MFMonomial{t.i, static_cast<int>(t.j), t.d}] += t.coeff;
    }
    return MFElement(weight, std::move(coords));
}

QSeries expand_monomial(const MFMonomial& m, long horizon) {
    if (m.i < 0 || (m.j != 0 && m.j != 1))
        throw std::invalid_argument("expand_monomial: monomial not in normal form");
    const long width = horizon - m.d;
    if (width <= 0)
        throw insufficient_precision("expand_monomial: horizon " + std::to_string(horizon) +
                                     " at or below the leading exponent " + std::to_string(m.d));
    static std::mutex cache_mutex;
    static std::map<std::tuple<long, int, long, long>, QSeries> cache;
    const std::tuple<long, int, long, long> key{m.i, m.j, m.d, horizon};
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    QSeries result = QSeries::one(width);
    if (m.i > 0) result = mul(result, pow(generator(GeneratorName::C4, width), m.i));
    if (m.j == 1) result = mul(result, generator(GeneratorName::C6, width));
    if (m.d != 0) result = mul(result, pow(generator(GeneratorName::Delta, width), m.d));
    std::scoped_lock lock(cache_mutex);
    return cache.try_emplace(key, std::move(result)).first->second;
}

QSeries expand(const MFElement& f, long terms) {
    if (terms <= 0) throw std::invalid_argument("expand: terms must be positive");
    const long horizon = f.min_lead() + terms;
    QSeries acc = QSeries::zero(f.min_lead(), horizon);
    for (const auto& [m, c] : f.coords()) acc = add(acc, scale(c, expand_monomial(m, horizon)));
    return acc;
}

std::vector<MFMonomial> basis(long weight, long d_min, long d_max) {
    if (d_min > d_max) throw std::invalid_argument("basis: d_min exceeds d_max");
    std::vector<MFMonomial> out;
    for (long d = d_min; d <= d_max; ++d)
        if (auto m = monomial_of_weight(weight, d)) out.push_back(*m);
    return out;
}

ReduceResult reduce(const QSeries& s, long weight) {
    const auto d_top = max_lead_exponent(weight);
    ReduceResult result{{}, s};
    if (!d_top || *d_top < s.valuation()) return result;
    if (s.horizon() <= *d_top)
        throw insufficient_precision(
            "reduce: window ends at q^" + std::to_string(s.horizon()) +
            " but weight-" + std::to_string(weight) + " monomials lead up to q^" +
            std::to_string(*d_top));
    for (long n = s.valuation(); n <= *d_top; ++n) {
        const auto m = monomial_of_weight(weight, n);
        if (!m) continue;
        const Rational c = result.remainder.coefficient(n);
        if (c == 0) continue;
        result.coords.emplace(*m, c);
        result.remainder =
            sub(result.remainder, scale(c, expand_monomial(*m, result.remainder.horizon())));
    }
    return result;
}

ConstantTermReport constant_term_vanishing(long weight, long max_pole) {
    if (max_pole < 1) throw std::invalid_argument("constant_term_vanishing: max_pole must be >= 1");
    ConstantTermReport report{weight, max_pole, true, {}};
    for (const auto& m : basis(weight, -max_pole, 0)) {
        const Rational q0 = expand_monomial(m, 1).coefficient(0);
        if (q0 != 0) report.pass = false;
        report.entries.push_back(ConstantTermEntry{m, q0});
    }
    return report;
}

Int image_lattice_coefficient(long i, int j, long d) {
    if (i < 0) throw std::invalid_argument("image_lattice_coefficient: negative c4 exponent");
    if (j != 0 && j != 1) throw std::invalid_argument("image_lattice_coefficient: c6 exponent must be 0 or 1");
    if (j == 1) return 2;
    if (i > 0) return 1;
    const long g = std::gcd(24L, d < 0 ? -d : d);
    return Int(24 / (g == 0 ? 24 : g));
}

LatticeCertificate image_lattice_contains(const MFElement& f) {
    LatticeCertificate cert{true, {}};
    for (const auto& [m, c] : f.coords()) {
        const Int required = image_lattice_coefficient(m.i, m.j, m.d);
        const bool ok = is_integer(c) && numerator(c) % required == 0;
        if (!ok) cert.contained = false;
        cert.entries.push_back(LatticeCertEntry{m, c, required, ok});
    }
    return cert;
}

bool is_unit(const MFElement& f) {
    if (f.coords().size() != 1) return false;
    const auto& [m, c] = *f.coords().begin();
    return m.i == 0 && m.j == 0 && (c == 1 || c == -1);
}

std::string to_string(const MFMonomial& m) {
    std::string out;
    auto factor = [&out](const char* name, long e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += name;
        if (e != 1) out += "^" + std::to_string(e);
    };
    factor("c4", m.i);
    factor("c6", m.j);
    factor("Delta", m.d);
    return out.empty() ? "1" : out;
}

std::string to_string(const MFElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.coords()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = negative ? Rational(-c) : c;
        const std::string mono = to_string(m);
        if (mag == 1 && mono != "1") {
            out += mono;
        } else {
            out += to_string(mag);
            if (mono != "1") out += "*" + mono;
        }
    }
    return out;
}

namespace {

struct ExprParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_space();
        return pos >= text.size();
    }

    char peek() {
        skip_space();
        return text[pos];
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos) + ": " + what);
    }

    long parse_integer() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) fail("expected an integer");
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    Rational parse_coefficient() {
        const Int n(std::to_string(parse_integer()));
        skip_space();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            const Int d(std::to_string(parse_integer()));
            return make_rational(n, d);
        }
        return Rational(n);
    }

    bool match_name(std::string_view name) {
        skip_space();
        if (text.size() - pos < name.size()) return false;
        for (std::size_t k = 0; k < name.size(); ++k)
            if (std::tolower(static_cast<unsigned char>(text[pos + k])) !=
                std::tolower(static_cast<unsigned char>(name[k])))
                return false;
        pos += name.size();
        return true;
    }

    FormalTerm parse_term() {
        FormalTerm term{Rational(1), 0, 0, 0};
        bool saw_factor = false;
        skip_space();
        if (pos < text.size() &&
            (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '+' || text[pos] == '-')) {
            term.coeff = parse_coefficient();
            skip_space();
            if (pos < text.size() && text[pos] == '*')
                ++pos;
            else
                return term;  // bare constant
        }
        while (true) {
            long* exponent = nullptr;
            if (match_name("c4"))
                exponent = &term.i;
            else if (match_name("c6"))
                exponent = &term.j;
            else if (match_name("delta") || match_name("DELTA"))
                exponent = &term.d;
            else
                fail("expected c4, c6 or Delta");
            long e = 1;
            skip_space();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                e = parse_integer();
            }
            *exponent += e;
            saw_factor = true;
            skip_space();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!saw_factor) fail("empty term");
        return term;
    }
};

}  // namespace

MFElement parse_mf_expression(std::string_view text) {
    ExprParser p{text};
    std::vector<FormalTerm> terms;
    if (p.eof()) throw std::invalid_argument("parse error: empty expression");
    bool negate = false;
    if (p.peek() == '-') {
        negate = true;
        ++p.pos;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    while (true) {
        FormalTerm t = p.parse_term();
        if (negate) t.coeff = -t.coeff;
        if (t.i < 0 || t.j < 0) p.fail("negative c4 or c6 exponent");
        terms.push_back(t);
        if (p.eof()) break;
        const char c = p.peek();
        if (c == '+')
            negate = false;
        else if (c == '-')
            negate = true;
        else
            p.fail(std::string("unexpected character '") + c + "'");
        ++p.pos;
    }
    return normalize(terms);
}

}  // namespace qmf
