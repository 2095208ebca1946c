#pragma once

#include "json.hpp"  // vendored single-header nlohmann/json

#include "qmf/pairing.hpp"
#include "qmf/periodicity.hpp"

namespace qmf {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const QSeries& s);
Json to_json(const MFElement& f);
Json to_json(const Coset& c);
Json to_json(const Witness& w);
Json to_json(const PairingResult& p);
Json to_json(const ReduceResult& r);
Json to_json(const ConstantTermReport& r);
Json to_json(const LatticeCertificate& c);
Json to_json(const WellDefinednessRecord& r);
Json to_json(const ObstructionReport& r);
Json to_json(const LowerBoundReport& r);
Json to_json(const Uspin76Derivation& d);

Rational rational_from_json(const Json& j);
QSeries qseries_from_json(const Json& j);
MFElement mfelement_from_json(const Json& j);
Coset coset_from_json(const Json& j);

}  // namespace qmf
