#pragma once

#include <json.hpp>

#include "liouville/contact3d.hpp"
#include "liouville/dynamics.hpp"
#include "liouville/germclass.hpp"
#include "liouville/liouville2d.hpp"

namespace liouville {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const RadicalNumber& v);
Json to_json(const RationalJet& f);
Json to_json(const Jet<RadicalNumber>& f);
Json to_json(const GermClass& cls);
/// Terms as [i, j, "c"] (or [i, j, k, "c"]) in exponent order.
Json to_json(const BivarPoly& p);
Json to_json(const TrivarPoly& p);
Json to_json(const PlaneField& X);
Json to_json(const Field3& X);
Json to_json(const HomBasis& basis);
/// Row-major rows of fraction strings.
Json to_json(const RationalMatrix& m);
Json to_json(const Equilibrium& e);
Json to_json(const Normalization& n);
Json to_json(const SweepResult& r);
Json to_json(const TransversalityReport& r);

RationalJet jet_from_json(const Json& j);

}  // namespace liouville
