#include "fdes/model_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "fdes/errors.hpp"

namespace fdes {

namespace {

std::size_t line_of(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

const Json& require(const Json& j, const char* key, const std::string& where = {})
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError("missing required field", where.empty() ? key : where + "." + key);
    return j.at(key);
}

std::vector<Degree> vector_from_json(const Json& j, const std::string& field)
{
    if (!j.is_array())
        throw ParseError("expected an array of degrees", field);
    std::vector<Degree> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(degree_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

Json vector_to_json(const StateVector& v)
{
    Json out = Json::array();
    for (const auto& d : v)
        out.push_back(d.to_string());
    return out;
}

Json string_to_json(const EventString& s) { return join_string(s); }

std::vector<std::string> names_from_json(const Json& j, const std::string& field)
{
    if (!j.is_array())
        throw ParseError("expected an array of names", field);
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string())
            throw ParseError("expected a string", field);
        out.push_back(x.get<std::string>());
    }
    return out;
}

Json label_to_json(const Label& label)
{
    if (label.size() == 1)
        return Json{{"state", vector_to_json(label[0])}};
    return Json{{"plant", vector_to_json(label[0])}, {"spec", vector_to_json(label[1])}};
}

} // namespace

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), {}, line_of(text, e.byte));
    }
}

Json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), path, line_of(text, e.byte));
    }
}

Degree degree_from_json(const Json& j, const std::string& field)
{
    try {
        if (j.is_string())
            return Degree::parse(j.get<std::string>());
        if (j.is_number_unsigned() || j.is_number_integer())
            return Degree::parse(j.dump());
        if (j.is_number_float()) {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
            return Degree::parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
        }
    } catch (const RangeError& e) {
        throw RangeError(field + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(e.what(), field);
    }
    throw ParseError("expected a degree", field);
}

ModelDocument model_from_json(const Json& j)
{
    if (!j.is_object())
        throw ParseError("model must be a JSON object");
    const std::string sem = require(j, "semantics").get<std::string>();
    Semantics semantics;
    if (sem == "max-min")
        semantics = Semantics::MaxMin;
    else if (sem == "max-product")
        semantics = Semantics::MaxProduct;
    else
        throw ParseError("expected \"max-min\" or \"max-product\"", "semantics");

    const StateVector initial = vector_from_json(require(j, "initial"), "initial");
    std::vector<std::string> states;
    if (j.contains("states"))
        states = names_from_json(j.at("states"), "states");
    else
        for (std::size_t i = 0; i < initial.size(); ++i)
            states.push_back("q" + std::to_string(i));
    if (states.size() != initial.size())
        throw ShapeError("initial: " + std::to_string(initial.size()) + " entries for " + std::to_string(states.size())
                         + " states");

    const Json& ev = require(j, "events");
    if (!ev.is_object())
        throw ParseError("expected an object of event matrices", "events");
    std::vector<FuzzyAutomaton::Event> events;
    for (const auto& [name, grid] : ev.items()) {
        const std::string field = "events." + name;
        if (!grid.is_array())
            throw ParseError("expected a matrix", field);
        std::vector<std::vector<Degree>> rows;
        for (std::size_t r = 0; r < grid.size(); ++r) {
            rows.push_back(vector_from_json(grid[r], field + "[" + std::to_string(r) + "]"));
            if (rows.back().size() != states.size())
                throw ShapeError(field + ": row " + std::to_string(r) + " has " + std::to_string(rows.back().size())
                                 + " entries for " + std::to_string(states.size()) + " states");
        }
        if (rows.size() != states.size())
            throw ShapeError(field + ": " + std::to_string(rows.size()) + " rows for " + std::to_string(states.size())
                             + " states");
        events.push_back({name, Matrix::from_rows(rows)});
    }

    std::vector<StateVector> marked;
    if (j.contains("marked")) {
        const Json& m = j.at("marked");
        if (!m.is_array())
            throw ParseError("expected an array of vectors", "marked");
        for (std::size_t i = 0; i < m.size(); ++i) {
            marked.push_back(vector_from_json(m[i], "marked[" + std::to_string(i) + "]"));
            if (marked.back().size() != states.size())
                throw ShapeError("marked[" + std::to_string(i) + "]: " + std::to_string(marked.back().size())
                                 + " entries for " + std::to_string(states.size()) + " states");
        }
    }

    ModelDocument doc{FuzzyAutomaton(states, std::move(events), initial, std::move(marked), semantics), std::nullopt};
    if (j.contains("uncontrollability")) {
        doc.attributes = attributes_from_json(j.at("uncontrollability"));
        doc.attributes->require_alphabet(doc.automaton.alphabet());
    }
    return doc;
}

ModelDocument load_model(const std::string& path)
{
    const Json j = load_json(path);
    try {
        return model_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), path);
    }
}

Json model_to_json(const FuzzyAutomaton& g, const EventAttributes* attrs)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["semantics"] = to_string(g.semantics());
    j["states"] = g.state_labels();
    j["initial"] = vector_to_json(g.initial());
    Json events = Json::object();
    for (const auto& e : g.events()) {
        Json grid = Json::array();
        for (std::size_t r = 0; r < e.matrix.rows(); ++r)
            grid.push_back(vector_to_json(e.matrix.row(r)));
        events[e.name] = std::move(grid);
    }
    j["events"] = std::move(events);
    Json marked = Json::array();
    for (const auto& m : g.marked())
        marked.push_back(vector_to_json(m));
    j["marked"] = std::move(marked);
    if (attrs) {
        Json uc = Json::object();
        for (const auto& e : g.alphabet())
            uc[e] = attrs->uncontrollability(e).to_string();
        j["uncontrollability"] = std::move(uc);
    }
    return j;
}

FuzzyLanguage language_from_json(const Json& j)
{
    const auto alphabet = names_from_json(require(j, "alphabet"), "alphabet");
    const Json& degrees = require(j, "degrees");
    if (!degrees.is_object())
        throw ParseError("expected an object of string degrees", "degrees");
    FuzzyLanguage out(alphabet);
    std::set<EventString> seen;
    for (const auto& [key, value] : degrees.items()) {
        const EventString s = split_string(key);
        if (!seen.insert(s).second)
            throw ParseError("string listed twice", "degrees." + key);
        try {
            out.set(s, degree_from_json(value, "degrees." + key));
        } catch (const UnknownEvent& e) {
            throw ParseError(e.what(), "degrees." + key);
        }
    }
    return out;
}

Json language_to_json(const FuzzyLanguage& l)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["alphabet"] = l.alphabet();
    Json degrees = Json::object();
    std::vector<EventString> keys;
    for (const auto& [s, d] : l.entries())
        keys.push_back(s);
    std::stable_sort(keys.begin(), keys.end(),
                     [](const EventString& a, const EventString& b) { return a.size() < b.size(); });
    for (const auto& s : keys)
        degrees[join_string(s)] = l(s).to_string();
    j["degrees"] = std::move(degrees);
    return j;
}

EventAttributes attributes_from_json(const Json& j)
{
    const Json& body = j.is_object() && j.contains("uncontrollability") ? j.at("uncontrollability") : j;
    if (!body.is_object())
        throw ParseError("expected an object of event degrees", "uncontrollability");
    std::map<std::string, Degree> uc;
    for (const auto& [name, value] : body.items()) {
        if (name == "schema_version")
            continue;
        uc.emplace(name, degree_from_json(value, "uncontrollability." + name));
    }
    return EventAttributes(std::move(uc));
}

Json attributes_to_json(const EventAttributes& a)
{
    Json uc = Json::object();
    for (const auto& [name, d] : a.map())
        uc[name] = d.to_string();
    return Json{{"schema_version", kSchemaVersion}, {"uncontrollability", std::move(uc)}};
}

Supervisor supervisor_from_json(const Json& j)
{
    if (j.contains("kind") && j.at("kind") != "explicit")
        throw ParseError("only explicit supervisors can be loaded", "kind");
    const auto alphabet = names_from_json(require(j, "alphabet"), "alphabet");
    const Degree fallback = j.contains("default") ? degree_from_json(j.at("default"), "default") : Degree::zero();
    std::map<EventString, Supervisor::Enablement> table;
    const Json& en = require(j, "enablement");
    if (!en.is_object())
        throw ParseError("expected an object keyed by strings", "enablement");
    for (const auto& [key, row] : en.items()) {
        const std::string field = "enablement." + key;
        if (!row.is_object())
            throw ParseError("expected an object of event degrees", field);
        Supervisor::Enablement cells;
        for (const auto& [event, value] : row.items())
            cells.emplace(event, degree_from_json(value, field + "." + event));
        table.emplace(split_string(key), std::move(cells));
    }
    try {
        return Supervisor::explicit_table(alphabet, std::move(table), fallback);
    } catch (const UnknownEvent& e) {
        throw ParseError(e.what(), "enablement");
    }
}

Json supervisor_to_json(const Supervisor& s)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["alphabet"] = s.alphabet();
    auto ordered = [&](const Supervisor::Enablement& row) {
        Json cells = Json::object();
        for (const auto& e : s.alphabet()) {
            const auto it = row.find(e);
            if (it != row.end())
                cells[e] = it->second.to_string();
        }
        return cells;
    };
    switch (s.mode()) {
    case Supervisor::Mode::Explicit: {
        j["kind"] = "explicit";
        j["default"] = s.fallback().to_string();
        Json en = Json::object();
        for (const auto& [str, row] : s.table())
            en[join_string(str)] = ordered(row);
        j["enablement"] = std::move(en);
        break;
    }
    case Supervisor::Mode::SynthesizedFromAutomaton: {
        j["kind"] = "synthesized";
        j["source"] = "pair-graph";
        j["warning"] = s.warning();
        Json rows = Json::array();
        if (const auto* g = s.pair_graph())
            for (std::size_t i = 0; i < g->nodes.size(); ++i) {
                Json row = label_to_json(g->nodes[i]);
                row["witness"] = string_to_json(g->witness[i]);
                row["enablement"] = ordered(s.enablement(g->witness[i]));
                rows.push_back(std::move(row));
            }
        j["rows"] = std::move(rows);
        break;
    }
    case Supervisor::Mode::SynthesizedFromLanguage: {
        j["kind"] = "synthesized";
        j["source"] = "language";
        j["warning"] = s.warning();
        Json rows = Json::array();
        const auto* pk = s.prefix_language();
        const auto support = pk->prefix_support();
        std::vector<EventString> strings(support.begin(), support.end());
        std::stable_sort(strings.begin(), strings.end(),
                         [](const EventString& a, const EventString& b) { return a.size() < b.size(); });
        for (const auto& str : strings)
            rows.push_back(Json{{"string", string_to_json(str)}, {"enablement", ordered(s.enablement(str))}});
        j["rows"] = std::move(rows);
        break;
    }
    }
    return j;
}

DocumentKind classify(const Json& j)
{
    if (!j.is_object())
        throw ParseError("expected a JSON object");
    if (j.contains("events") && j.contains("initial"))
        return DocumentKind::Model;
    if (j.contains("degrees"))
        return DocumentKind::Language;
    if (j.contains("enablement"))
        return DocumentKind::Supervisor;
    if (j.contains("uncontrollability"))
        return DocumentKind::Attributes;
    throw ParseError("unrecognised document: expected a model, language, supervisor or attribute file");
}

Json graph_to_json(const ReachableStateGraph& g)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = !g.nodes.empty() && g.nodes[0].size() == 2 ? "pairs" : "states";
    j["events"] = g.events;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        Json node{{"index", i}, {"witness", string_to_json(g.witness[i])}};
        node.update(label_to_json(g.nodes[i]));
        Json edges = Json::object();
        for (std::size_t e = 0; e < g.events.size(); ++e)
            edges[g.events[e]] = g.edges[i][e];
        node["edges"] = std::move(edges);
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

namespace {

Json tree_node_json(const ComputingTreeNode& n)
{
    Json j = label_to_json(n.label);
    if (n.incoming_event)
        j["event"] = *n.incoming_event;
    j["leaf"] = n.is_leaf;
    if (!n.children.empty()) {
        Json children = Json::array();
        for (const auto& c : n.children)
            children.push_back(tree_node_json(c));
        j["children"] = std::move(children);
    }
    return j;
}

Json row_to_json(const ControllabilityRow& r)
{
    return Json{{"s", string_to_json(r.representative)},
                {"event", r.event},
                {"prK_s", r.prK_s.to_string()},
                {"LG_s_sigma", r.LG_s_sigma.to_string()},
                {"sigma_uc", r.sigma_uc.to_string()},
                {"lhs", r.lhs.to_string()},
                {"prK_s_sigma", r.prK_s_sigma.to_string()},
                {"verdict", r.verdict}};
}

Json condition_json(const NonblockingReport::Condition& c)
{
    Json j{{"holds", c.holds}};
    if (c.witness)
        j["witness"] = string_to_json(*c.witness);
    return j;
}

Json admissibility_json(const AdmissibilityResult& a)
{
    Json j{{"admissible", a.admissible}};
    j["bound"] = a.bound ? Json(*a.bound) : Json(nullptr);
    if (a.counterexample)
        j["counterexample"] = Json{{"s", string_to_json(a.counterexample->s)},
                                   {"event", a.counterexample->event},
                                   {"required", a.counterexample->required.to_string()},
                                   {"enabled", a.counterexample->enabled.to_string()}};
    return j;
}

} // namespace

Json tree_to_json(const ComputingTreeNode& root)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["nodes"] = count_nodes(root);
    j["leaves"] = count_leaves(root);
    j["root"] = tree_node_json(root);
    return j;
}

Json report_to_json(const ControllabilityReport& r)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["overall"] = r.overall;
    j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
    j["counterexample"] = r.first_failure() ? row_to_json(*r.first_failure()) : Json(nullptr);
    j["warnings"] = r.warnings;
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back(row_to_json(row));
    j["rows"] = std::move(rows);
    return j;
}

Json nonblocking_to_json(const NonblockingReport& r)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["preconditions"] = Json{{"prefix_in_marked", condition_json(r.prefix_in_marked)},
                              {"initial_one", condition_json(r.initial_one)}};
    Json b{{"holds", r.condition_b.overall}};
    if (const auto* row = r.condition_b.first_failure())
        b["counterexample"] = row_to_json(*row);
    j["conditions"] = Json{{"a", condition_json(r.condition_a)}, {"b", std::move(b)}};
    j["admissibility"] = admissibility_json(r.admissibility);
    Json direct{{"verdict", to_string(r.direct)}, {"exhaustive", r.exhaustive}, {"depth", r.depth}};
    if (r.blocking_witness) {
        direct["witness"] = string_to_json(*r.blocking_witness);
        direct["generated"] = r.witness_generated.to_string();
        direct["prefix_marked"] = r.witness_prefix_marked.to_string();
    }
    j["direct"] = std::move(direct);
    return j;
}

} // namespace fdes
