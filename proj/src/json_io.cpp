#include "qmf/json_io.hpp"

#include <limits>

namespace qmf {

Json to_json(const Rational& r) {
    return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

Json to_json(const QSeries& s) {
    Json coeffs = Json::array();
    for (const auto& [n, c] : s.terms())
        coeffs.push_back(Json{{"n", n}, {"num", numerator(c).str()}, {"den", denominator(c).str()}});
    return Json{{"valuation", s.valuation()}, {"horizon", s.horizon()}, {"coeffs", coeffs}};
}

Json to_json(const MFElement& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.coords())
        terms.push_back(Json{{"i", m.i},
                             {"j", m.j},
                             {"d", m.d},
                             {"num", numerator(c).str()},
                             {"den", denominator(c).str()}});
    return Json{{"weight", f.weight()}, {"terms", terms}};
}

Json to_json(const Coset& c) {
    return Json{{"weight", c.weight()}, {"rep", to_json(c.rep())}, {"canonical", c.known_canonical()}};
}

Json to_json(const Witness& w) {
    Json invariant;
    switch (w.kind) {
        case WitnessKind::string_class: invariant = to_json(w.witten_genus()); break;
        case WitnessKind::relative_witten: invariant = to_json(w.coset()); break;
        case WitnessKind::relative_dirac: invariant = to_json(w.dirac_index()); break;
    }
    return Json{{"name", w.name},
                {"degree", w.degree},
                {"kind", to_string(w.kind)},
                {"invariant", invariant},
                {"provenance", w.provenance}};
}

Json to_json(const PairingResult& p) {
    Json out{{"value", to_json(p.value)}, {"d", p.d}, {"integral", p.integral}};
    if (p.weights) out["weights"] = Json::array({(*p.weights)[0], (*p.weights)[1], (*p.weights)[2]});
    return out;
}

Json to_json(const ReduceResult& r) {
    Json coords = Json::array();
    for (const auto& [m, c] : r.coords)
        coords.push_back(Json{{"i", m.i},
                              {"j", m.j},
                              {"d", m.d},
                              {"num", numerator(c).str()},
                              {"den", denominator(c).str()}});
    return Json{{"coords", coords},
                {"remainder", to_json(r.remainder)},
                {"is_member", r.is_member()}};
}

Json to_json(const ConstantTermReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"monomial", to_string(e.monomial)}, {"q0", to_json(e.q0)}});
    return Json{{"weight", r.weight}, {"max_pole", r.max_pole}, {"pass", r.pass}, {"entries", entries}};
}

Json to_json(const LatticeCertificate& c) {
    Json entries = Json::array();
    for (const auto& e : c.entries)
        entries.push_back(Json{{"monomial", to_string(e.monomial)},
                               {"coeff", to_json(e.coeff)},
                               {"required", e.required.str()},
                               {"ok", e.ok}});
    return Json{{"contained", c.contained}, {"entries", entries}};
}

Json to_json(const WellDefinednessRecord& r) {
    Json out{{"pass", r.pass}, {"trials", r.trials}, {"base_value", to_json(r.base_value)}};
    if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
    if (r.perturbed_value) out["perturbed_value"] = to_json(*r.perturbed_value);
    return out;
}

namespace {

// Moduli are small in practice; fall back to a decimal string if one ever
// exceeds the int64 range.
Json modulus_to_json(const Int& m) {
    if (m >= std::numeric_limits<long long>::min() && m <= std::numeric_limits<long long>::max())
        return Json(m.convert_to<long long>());
    return Json(m.str());
}

}  // namespace

Json to_json(const ObstructionReport& r) {
    return Json{{"d", r.d},
                {"target", r.target},
                {"witness_chain", r.witness_chain},
                {"pairing_coefficient", to_json(r.pairing_coefficient)},
                {"modulus", modulus_to_json(r.modulus)},
                {"citations", r.citations}};
}

Json to_json(const LowerBoundReport& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json entry{{"d", c.d}, {"method", c.method}};
        if (c.n) entry["n"] = *c.n;
        if (c.m) entry["m"] = *c.m;
        if (c.modulus) entry["modulus"] = modulus_to_json(*c.modulus);
        if (c.pairing) entry["pairing"] = to_json(*c.pairing);
        entry["citations"] = c.citations;
        cases.push_back(std::move(entry));
    }
    return Json{{"bound", r.bound}, {"statement", r.statement}, {"cases", cases}};
}

Json to_json(const Uspin76Derivation& d) {
    Json steps = Json::array();
    for (const auto& s : d.steps)
        steps.push_back(Json{{"statement", s.statement}, {"justification", s.justification}});
    return Json{{"result", to_json(d.result)}, {"steps", steps}};
}

namespace {

Int int_from_json_string(const Json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string("expected a decimal string for ") + what);
    const std::string s = j.get<std::string>();
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad decimal string for ") + what + ": '" + s + "'");
    }
}

}  // namespace

Rational rational_from_json(const Json& j) {
    return make_rational(int_from_json_string(j.at("num"), "num"),
                         int_from_json_string(j.at("den"), "den"));
}

QSeries qseries_from_json(const Json& j) {
    const long valuation = j.at("valuation").get<long>();
    const long horizon = j.at("horizon").get<long>();
    std::map<long, Rational> coeffs;
    for (const auto& entry : j.at("coeffs")) {
        const long n = entry.at("n").get<long>();
        if (coeffs.contains(n))
            throw std::invalid_argument("qseries_from_json: duplicate exponent " + std::to_string(n));
        coeffs.emplace(n, rational_from_json(entry));
    }
    return QSeries(valuation, horizon, std::move(coeffs));
}

MFElement mfelement_from_json(const Json& j) {
    const long weight = j.at("weight").get<long>();
    std::map<MFMonomial, Rational> coords;
    for (const auto& entry : j.at("terms")) {
        const MFMonomial m{entry.at("i").get<long>(), entry.at("j").get<int>(),
                           entry.at("d").get<long>()};
        if (coords.contains(m))
            throw std::invalid_argument("mfelement_from_json: duplicate monomial " + to_string(m));
        coords.emplace(m, rational_from_json(entry));
    }
    return MFElement(weight, std::move(coords));
}

Coset coset_from_json(const Json& j) {
    return Coset(j.at("weight").get<long>(), qseries_from_json(j.at("rep")),
                 j.value("canonical", false));
}

}  // namespace qmf
