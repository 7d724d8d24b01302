#pragma once

#include <string>
#include <variant>

#include "json.hpp"
#include "relalg/algebra_io.hpp"
#include "relalg/repcheck.hpp"

namespace relalg {

// Labeling:  {"modulus": 38, "atoms": {"a": [...], "r": [...], "r_conv": [...]}}
// Grouping:  {"p": 33791, "m": 62, "groups": {"a": [...], "r": [0], "r_conv": [31]}}
// Points:    {"points": 5, "atoms": ["a", "b"], "labels": [[-1, 0, ...], ...]}
// Atom keys resolve through AlgebraSpec::find_atom, so "r_conv" names conv(r).

LabelingRep labeling_from_json(const nlohmann::json& j, const AlgebraSpec& spec);
GroupingRep grouping_from_json(const nlohmann::json& j, const AlgebraSpec& spec);
PointLabeling points_from_json(const nlohmann::json& j, const AlgebraSpec& spec);

nlohmann::json to_json(const LabelingRep& rep, const AlgebraSpec& spec);
nlohmann::json to_json(const GroupingRep& rep, const AlgebraSpec& spec);
nlohmann::json to_json(const PointLabeling& rep, const AlgebraSpec& spec);

using AnyRep = std::variant<LabelingRep, GroupingRep, PointLabeling>;
AnyRep representation_from_json(const nlohmann::json& j, const AlgebraSpec& spec);

VerifyReport verify(const AlgebraSpec& spec, const AnyRep& rep);

/// JSON key for an atom: "x_conv" for an asymmetric atom named after its converse x.
std::string json_atom_key(const AlgebraSpec& spec, int atom);

/// Pretty JSON with arrays of scalars kept on one line.
std::string dump_compact(const nlohmann::json& j, int indent = 2);

nlohmann::json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace relalg
