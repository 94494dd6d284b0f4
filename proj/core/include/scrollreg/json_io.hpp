#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "scrollreg/cohomology.hpp"
#include "scrollreg/complex.hpp"
#include "scrollreg/hypercohomology.hpp"
#include "scrollreg/oracle.hpp"
#include "scrollreg/regularity.hpp"
#include "scrollreg/sheaf.hpp"
#include "scrollreg/splitting.hpp"
#include "scrollreg/window.hpp"

namespace scrollreg {

using Json = nlohmann::ordered_json;

/// Malformed or ill-typed JSON input.
struct JsonError : Error {
  using Error::Error;
};

Json to_json(const Scroll& x);
Scroll scroll_from_json(const Json& j);

Json to_json(DivClass d);
DivClass divclass_from_json(const Json& j);
/// "p,q" as typed on a command line.
DivClass parse_divclass(const std::string& s);

/// Numbers that fit in 64 bits are emitted as JSON integers, larger ones as
/// decimal strings.
Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

Json to_json(const CohomTable& t);
CohomTable cohom_table_from_json(const Json& j);
Json to_json(const HyperTable& t);

Json to_json(const SheafSpec& e);
/// {"split": [[p,q],...]} or {"omega": {"i": i, "twist": [p,q]}}.
SheafSpec sheaf_from_json(const Json& j);

Json to_json(const CoxExponent& c);
Json to_json(const TInterval& t);
Json to_json(const MonomialComplex& c);
Json to_json(const ValidationReport& r);

Json to_json(const RegularityReport& r);
Json to_json(const RegResult& r);
Json to_json(const ComparisonReport& r);
Json to_json(const SplittingReport& r);

/// Parses text, throwing JsonError with the parser message on failure.
Json parse_json(const std::string& text);

}  // namespace scrollreg
