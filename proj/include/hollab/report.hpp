#pragma once

#include <string>

#include <json.hpp>

#include "hollab/criterion.hpp"
#include "hollab/holomorph.hpp"
#include "hollab/psl2.hpp"

namespace hollab::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;
inline constexpr const char* kVersion = "0.1.0";

/// schema, tool, version, seed and command.
Json envelope(const std::string& command);

/// {degree, order, generators} with generators in 1-based cycle notation.
Json group_json(const Group& g);
Group group_from_json(const Json& j);

Json witness_json(const criterion::CriterionWitness& w);
criterion::CriterionWitness witness_from_json(const Json& j);

Json verdict_json(const std::string& name, const Group& N, const criterion::Verdict& v);
/// Recovers index, normality, conclusion, kind, reason, |N| and witnesses.
criterion::Verdict verdict_from_json(const Json& j);

Json theorem_witness_json(const psl2::TheoremWitness& w);
Json search_json(const holomorph::SearchResult& r);

} // namespace hollab::report
