#pragma once

#include <string>

#include "grtoda/diffop.hpp"
#include <nlohmann/json_fwd.hpp>

namespace grtoda {

// Deterministic ASCII grammar for ExpPoly / DiffOperator (see
// docs/serialization.md). to_text(x) is parseable by the matching parse_*
// and round-trips exactly.
std::string to_text(const ExpPoly& p);
std::string to_text(const DiffOperator& d);

ExpPoly parse_exppoly(const std::string& s);
DiffOperator parse_diffop(const std::string& s);

nlohmann::json to_json(const GaussRat& c);
nlohmann::json to_json(const ParamScalar& s);
nlohmann::json to_json(const VarId& v);
nlohmann::json to_json(const ExpPoly& p);
nlohmann::json to_json(const DiffOperator& d);

} // namespace grtoda
