#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fdes/attributes.hpp"
#include "fdes/automaton.hpp"
#include "fdes/language.hpp"
#include "fdes/reachability.hpp"
#include "fdes/supervisory.hpp"

namespace fdes {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Reads and parses a JSON file. Syntax errors become ParseError with a line.
Json load_json(const std::string& path);
Json parse_json(const std::string& text);

/// Degrees may be written as strings ("0.8", "3/4") or JSON numbers.
Degree degree_from_json(const Json& j, const std::string& field);

struct ModelDocument {
    FuzzyAutomaton automaton;
    std::optional<EventAttributes> attributes;
};

ModelDocument model_from_json(const Json& j);
ModelDocument load_model(const std::string& path);
Json model_to_json(const FuzzyAutomaton& g, const EventAttributes* attrs = nullptr);

/// {"alphabet": [...], "degrees": {"a b": "0.8", "": "1"}}
FuzzyLanguage language_from_json(const Json& j);
Json language_to_json(const FuzzyLanguage& l);

/// Either {"uncontrollability": {...}} or a bare event→degree object.
EventAttributes attributes_from_json(const Json& j);
Json attributes_to_json(const EventAttributes& a);

/// {"kind": "explicit", "alphabet": [...], "default": "0", "enablement": {"a": {"b": "0.8"}}}
Supervisor supervisor_from_json(const Json& j);
Json supervisor_to_json(const Supervisor& s);

enum class DocumentKind { Model, Language, Supervisor, Attributes };
DocumentKind classify(const Json& j);

Json graph_to_json(const ReachableStateGraph& g);
Json tree_to_json(const ComputingTreeNode& root);
Json report_to_json(const ControllabilityReport& r);
Json nonblocking_to_json(const NonblockingReport& r);

} // namespace fdes
