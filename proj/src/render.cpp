#include "fdes/render.hpp"

#include <algorithm>
#include <sstream>

namespace fdes {

std::size_t display_width(const std::string& s)
{
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string display_string(const EventString& s) { return join_string(s, true); }

TextTable::TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

void TextTable::add(std::vector<std::string> row)
{
    row.resize(header_.size());
    rows_.push_back(std::move(row));
}

std::string TextTable::str() const
{
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
        width[c] = display_width(header_[c]);
        for (const auto& r : rows_)
            width[c] = std::max(width[c], display_width(r[c]));
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (std::size_t c = 0; c < cells.size(); ++c)
            out << ' ' << cells[c] << std::string(width[c] - display_width(cells[c]), ' ') << " |";
        out << '\n';
    };
    line(header_);
    out << '|';
    for (std::size_t c = 0; c < header_.size(); ++c)
        out << std::string(width[c] + 2, '-') << '|';
    out << '\n';
    for (const auto& r : rows_)
        line(r);
    return out.str();
}

std::string render_states(const ReachableStateGraph& g)
{
    const bool pairs = !g.nodes.empty() && g.nodes[0].size() == 2;
    TextTable t({"#", "s", pairs ? "(q0⊙s, p0⊙s)" : "q0⊙s"});
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        t.add({std::to_string(i), display_string(g.witness[i]), format_label(g.nodes[i])});
    return t.str() + std::to_string(g.nodes.size()) + (pairs ? " distinct pairs\n" : " distinct states\n");
}

namespace {

void tree_lines(const ComputingTreeNode& n, const std::string& indent, std::ostringstream& out)
{
    out << indent;
    if (n.incoming_event)
        out << *n.incoming_event << " -> ";
    out << format_label(n.label) << (n.is_leaf ? " *" : "") << '\n';
    for (const auto& c : n.children)
        tree_lines(c, indent + "  ", out);
}

const char* tf(bool b) { return b ? "T" : "F"; }

} // namespace

std::string render_tree(const ComputingTreeNode& root)
{
    std::ostringstream out;
    tree_lines(root, "", out);
    out << count_nodes(root) << " nodes, " << count_leaves(root) << " leaves (marked *)\n";
    return out.str();
}

std::string render_report(const ControllabilityReport& r)
{
    const bool a = r.spec_is_automaton;
    TextTable t({"s", "σ", a ? "[p0⊙s]" : "pr(K)(s)", a ? "[q0⊙s⊙σ]" : "L_G(sσ)", "Σuc(σ)", "L(G,H,s,σ)",
                 a ? "[p0⊙s⊙σ]" : "pr(K)(sσ)", a ? "L ≤ [p0⊙s⊙σ]" : "L ≤ pr(K)(sσ)"});
    const EventString* previous = nullptr;
    for (const auto& row : r.rows) {
        const bool repeat = previous && *previous == row.representative;
        t.add({repeat ? "" : display_string(row.representative), row.event, row.prK_s.to_string(),
               row.LG_s_sigma.to_string(), row.sigma_uc.to_string(), row.lhs.to_string(), row.prK_s_sigma.to_string(),
               tf(row.verdict)});
        previous = &row.representative;
    }
    std::ostringstream out;
    out << t.str();
    for (const auto& w : r.warnings)
        out << "warning: " << w << '\n';
    if (r.bound)
        out << "checked strings of length <= " << *r.bound << " (" << r.rows.size() << " rows)\n";
    out << "overall: " << tf(r.overall);
    if (const auto* f = r.first_failure())
        out << " (s = " << display_string(f->representative) << ", σ = " << f->event << ": " << f->lhs.to_string()
            << " > " << f->prK_s_sigma.to_string() << ")";
    out << '\n';
    return out.str();
}

std::string render_nonblocking(const NonblockingReport& r)
{
    std::ostringstream out;
    auto cond = [&](const char* name, const NonblockingReport::Condition& c) {
        out << name << ": " << tf(c.holds);
        if (c.witness)
            out << " (at " << display_string(*c.witness) << ")";
        out << '\n';
    };
    cond("precondition pr(K) ⊆ L_G,m", r.prefix_in_marked);
    cond("precondition K(ε) = 1", r.initial_one);
    cond("condition (a) K = pr(K) ∩ L_G,m", r.condition_a);
    out << "condition (b) controllability: " << tf(r.condition_b.overall);
    if (const auto* f = r.condition_b.first_failure())
        out << " (s = " << display_string(f->representative) << ", σ = " << f->event << ")";
    out << '\n';
    out << "admissibility: " << tf(r.admissibility.admissible);
    out << (r.admissibility.bound ? " (strings of length <= " + std::to_string(*r.admissibility.bound) + ")"
                                  : std::string(" (all strings)"));
    if (r.admissibility.counterexample)
        out << " violated at s = " << display_string(r.admissibility.counterexample->s)
            << ", σ = " << r.admissibility.counterexample->event;
    out << '\n';
    out << "direct test: " << to_string(r.direct);
    if (r.blocking_witness)
        out << " at " << display_string(*r.blocking_witness) << " (L_S/G = " << r.witness_generated.to_string()
            << ", pr(L_S/G,m) = " << r.witness_prefix_marked.to_string() << ")";
    out << (r.exhaustive ? " [controlled language closes within depth " : " [checked to depth ") << r.depth << "]\n";
    return out.str();
}

std::string render_supervisor(const Supervisor& s)
{
    std::vector<std::string> header{"s"};
    for (const auto& e : s.alphabet())
        header.push_back("S(s)(" + e + ")");
    TextTable t(header);
    auto add = [&](const EventString& str) {
        std::vector<std::string> row{display_string(str)};
        for (const auto& e : s.alphabet())
            row.push_back(s.enablement(str, e).to_string());
        t.add(std::move(row));
    };
    std::ostringstream out;
    switch (s.mode()) {
    case Supervisor::Mode::Explicit:
        for (const auto& [str, row] : s.table())
            add(str);
        out << t.str() << "all other (s, σ): " << s.fallback().to_string() << '\n';
        return out.str();
    case Supervisor::Mode::SynthesizedFromAutomaton:
        if (const auto* g = s.pair_graph())
            for (const auto& w : g->witness)
                add(w);
        out << t.str() << "one row per reachable (plant, spec) pair; strings reaching the same pair share the row\n";
        break;
    case Supervisor::Mode::SynthesizedFromLanguage: {
        std::vector<EventString> strings;
        for (const auto& str : s.prefix_language()->prefix_support())
            strings.push_back(str);
        std::stable_sort(strings.begin(), strings.end(),
                         [](const EventString& a, const EventString& b) { return a.size() < b.size(); });
        for (const auto& str : strings)
            add(str);
        out << t.str() << "outside the listed strings: S(s)(σ) = min(Σuc(σ), L_G(sσ)) when Σuc(σ) >= pr(K)(sσ)\n";
        break;
    }
    }
    if (s.warning())
        out << "warning: the controllability condition fails; the supervisor does not achieve pr(K)\n";
    return out.str();
}

std::string render_language(const FuzzyLanguage& l)
{
    std::vector<EventString> strings;
    for (const auto& [str, d] : l.entries())
        strings.push_back(str);
    std::stable_sort(strings.begin(), strings.end(),
                     [](const EventString& a, const EventString& b) { return a.size() < b.size(); });
    TextTable t({"s", "degree"});
    for (const auto& str : strings)
        t.add({display_string(str), l(str).to_string()});
    return t.str() + (strings.empty() ? "(empty language: every string has degree 0)\n" : "");
}

} // namespace fdes
