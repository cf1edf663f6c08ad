#include "fdes/supervisory.hpp"

#include <algorithm>
#include <set>

#include "fdes/errors.hpp"

namespace fdes {

namespace {

EventString extend(const EventString& s, const std::string& e)
{
    EventString out = s;
    out.push_back(e);
    return out;
}

void require_same_alphabet(const std::vector<std::string>& a, const std::vector<std::string>& b)
{
    if (std::set<std::string>(a.begin(), a.end()) != std::set<std::string>(b.begin(), b.end()))
        throw AlphabetMismatch("plant and specification have different event alphabets");
}

void require_known_events(const FuzzyAutomaton& g, const EventString& s)
{
    for (const auto& e : s)
        if (!g.has_event(e))
            throw UnknownEvent(e);
}

/// Shortest first, then by position of each symbol in the alphabet.
std::vector<EventString> shortlex(const std::set<EventString>& strings, const std::vector<std::string>& alphabet)
{
    std::vector<EventString> out(strings.begin(), strings.end());
    auto rank = [&](const std::string& e) {
        return std::find(alphabet.begin(), alphabet.end(), e) - alphabet.begin();
    };
    std::sort(out.begin(), out.end(), [&](const EventString& a, const EventString& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i])
                return rank(a[i]) < rank(b[i]);
        return false;
    });
    return out;
}

void push_row(ControllabilityReport& report, ControllabilityRow row, const CheckOptions& options)
{
    const bool ok = row.verdict;
    report.rows.push_back(std::move(row));
    if (!ok && report.overall) {
        report.overall = false;
        report.counterexample = report.rows.size() - 1;
    }
    if (options.progress && report.rows.size() % 4096 == 0)
        options.progress(report.rows.size());
}

/// With first_failure set, the block of the failing representative is
/// completed and then the check stops.
bool should_stop(const ControllabilityReport& report, const CheckOptions& options)
{
    return options.first_failure && !report.overall;
}

void finish(ControllabilityReport& report, const CheckOptions& options)
{
    if (options.progress)
        options.progress(report.rows.size());
}

void containment_warning(ControllabilityReport& report, const EventString& s, const Degree& prk, const Degree& lg)
{
    if (lg < prk && report.warnings.empty())
        report.warnings.push_back("pr(K) is not contained in L_G: at '" + join_string(s, true) + "' pr(K) = "
                                  + prk.to_string() + " > L_G = " + lg.to_string());
}

} // namespace

ControllabilityRow make_row(EventString s, std::string event, Degree prK_s, Degree LG_s_sigma, Degree sigma_uc,
                            Degree prK_s_sigma)
{
    ControllabilityRow row;
    row.lhs = std::min({prK_s, sigma_uc, LG_s_sigma});
    row.verdict = row.lhs <= prK_s_sigma;
    row.representative = std::move(s);
    row.event = std::move(event);
    row.prK_s = std::move(prK_s);
    row.LG_s_sigma = std::move(LG_s_sigma);
    row.sigma_uc = std::move(sigma_uc);
    row.prK_s_sigma = std::move(prK_s_sigma);
    return row;
}

ControllabilityReport check_controllability(const FuzzyAutomaton& g, const FuzzyAutomaton& h,
                                            const EventAttributes& attrs, const CheckOptions& options)
{
    if (g.semantics() != Semantics::MaxMin || h.semantics() != Semantics::MaxMin)
        throw SemanticsMismatch("the pair-graph check needs max-min automata; use the length-bounded check");
    require_same_alphabet(g.alphabet(), h.alphabet());
    attrs.require_alphabet(g.alphabet());

    const ReachableStateGraph graph = enumerate_pairs(g, h, options.reach);
    ControllabilityReport report;
    for (std::size_t node = 0; node < graph.nodes.size(); ++node) {
        const auto& q = graph.nodes[node][0];
        const auto& p = graph.nodes[node][1];
        const Degree prk_s = max_element(p);
        containment_warning(report, graph.witness[node], prk_s, max_element(q));
        for (std::size_t e = 0; e < graph.events.size(); ++e) {
            const auto& next = graph.nodes[graph.edges[node][e]];
            const auto& name = graph.events[e];
            push_row(report,
                     make_row(graph.witness[node], name, prk_s, max_element(next[0]), attrs.uncontrollability(name),
                              max_element(next[1])),
                     options);
        }
        if (should_stop(report, options))
            break;
    }
    finish(report, options);
    return report;
}

ControllabilityReport check_controllability(const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                            const EventAttributes& attrs, const CheckOptions& options)
{
    require_same_alphabet(g.alphabet(), k.alphabet());
    attrs.require_alphabet(g.alphabet());
    const FuzzyLanguage pk = prefix_closure(k);
    ControllabilityReport report;
    report.spec_is_automaton = false;
    for (const auto& s : shortlex(pk.prefix_support(), g.alphabet())) {
        const StateVector q = g.run(s);
        containment_warning(report, s, pk(s), max_element(q));
        for (const auto& e : g.alphabet()) {
            const EventString se = extend(s, e);
            push_row(report, make_row(s, e, pk(s), max_element(g.step(q, e)), attrs.uncontrollability(e), pk(se)),
                     options);
        }
        if (should_stop(report, options))
            break;
    }
    finish(report, options);
    return report;
}

namespace {

/// Walks all strings of length <= n in shortlex order, carrying the plant state.
/// `prk` maps (string, extra state) to pr(K); the spec state is stepped by `advance`.
template <typename SpecState, typename PrK, typename Advance>
ControllabilityReport bounded_check(const FuzzyAutomaton& g, const EventAttributes& attrs, std::size_t n,
                                    const CheckOptions& options, SpecState initial, PrK prk, Advance advance)
{
    ControllabilityReport report;
    report.bound = n;
    struct Item {
        EventString s;
        StateVector q;
        SpecState spec;
    };
    std::vector<Item> layer{{{}, g.initial(), std::move(initial)}};
    for (std::size_t len = 0; len <= n; ++len) {
        std::vector<Item> next;
        for (auto& item : layer) {
            const Degree prk_s = prk(item.s, item.spec);
            containment_warning(report, item.s, prk_s, max_element(item.q));
            for (std::size_t e = 0; e < g.events().size(); ++e) {
                const auto& name = g.events()[e].name;
                Item child{extend(item.s, name), g.step(item.q, e), advance(item.spec, name)};
                push_row(report,
                         make_row(item.s, name, prk_s, max_element(child.q), attrs.uncontrollability(name),
                                  prk(child.s, child.spec)),
                         options);
                if (len < n)
                    next.push_back(std::move(child));
            }
            if (should_stop(report, options)) {
                finish(report, options);
                return report;
            }
        }
        layer = std::move(next);
    }
    finish(report, options);
    return report;
}

} // namespace

ControllabilityReport check_n_controllability(const FuzzyAutomaton& g, const FuzzyAutomaton& h,
                                              const EventAttributes& attrs, std::size_t n,
                                              const CheckOptions& options)
{
    require_same_alphabet(g.alphabet(), h.alphabet());
    attrs.require_alphabet(g.alphabet());
    return bounded_check(
        g, attrs, n, options, h.initial(), [](const EventString&, const StateVector& p) { return max_element(p); },
        [&h](const StateVector& p, const std::string& e) { return h.step(p, e); });
}

ControllabilityReport check_n_controllability(const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                              const EventAttributes& attrs, std::size_t n,
                                              const CheckOptions& options)
{
    require_same_alphabet(g.alphabet(), k.alphabet());
    attrs.require_alphabet(g.alphabet());
    const FuzzyLanguage pk = prefix_closure(k);
    auto report = bounded_check(
        g, attrs, n, options, 0, [&pk](const EventString& s, int) { return pk(s); },
        [](int, const std::string&) { return 0; });
    report.spec_is_automaton = false;
    return report;
}

std::size_t n_controllability_row_count(std::size_t alphabet_size, std::size_t n)
{
    std::size_t strings = 0;
    std::size_t layer = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        strings += layer;
        layer *= alphabet_size;
    }
    return strings * alphabet_size;
}

SufficientConditionResult check_sufficient_condition(const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                                     const EventAttributes& attrs)
{
    require_same_alphabet(g.alphabet(), k.alphabet());
    attrs.require_alphabet(g.alphabet());
    SufficientConditionResult result;
    for (const auto& s : shortlex(k.prefix_support(), g.alphabet())) {
        const StateVector q = g.run(s);
        for (const auto& e : g.alphabet()) {
            const EventString se = extend(s, e);
            const Degree need = std::min(attrs.uncontrollability(e), max_element(g.step(q, e)));
            if (k(se) < need) {
                result.holds = false;
                result.counterexample = LanguageViolation{s, e, need, k(se)};
                return result;
            }
        }
    }
    return result;
}

Supervisor Supervisor::synthesize(const FuzzyAutomaton& g, const FuzzyAutomaton& h, const EventAttributes& attrs,
                                  const CheckOptions& options)
{
    require_same_alphabet(g.alphabet(), h.alphabet());
    attrs.require_alphabet(g.alphabet());
    Supervisor s;
    s.mode_ = Mode::SynthesizedFromAutomaton;
    s.alphabet_ = g.alphabet();
    s.g_ = std::make_shared<const FuzzyAutomaton>(g);
    s.h_ = std::make_shared<const FuzzyAutomaton>(h);
    s.attrs_ = attrs;
    if (g.semantics() == Semantics::MaxMin && h.semantics() == Semantics::MaxMin) {
        s.graph_ = std::make_shared<const ReachableStateGraph>(enumerate_pairs(g, h, options.reach));
        s.warning_ = !check_controllability(g, h, attrs, options).overall;
    } else {
        try {
            s.graph_ = std::make_shared<const ReachableStateGraph>(enumerate_pairs(g, h, options.reach));
        } catch (const DepthExceeded&) {
            s.warning_ = true;
        }
    }
    return s;
}

Supervisor Supervisor::synthesize(const FuzzyAutomaton& g, const FuzzyLanguage& k, const EventAttributes& attrs,
                                  const CheckOptions& options)
{
    Supervisor s;
    s.mode_ = Mode::SynthesizedFromLanguage;
    s.alphabet_ = g.alphabet();
    s.g_ = std::make_shared<const FuzzyAutomaton>(g);
    s.prk_ = std::make_shared<const FuzzyLanguage>(prefix_closure(k));
    s.attrs_ = attrs;
    s.warning_ = !check_controllability(g, k, attrs, options).overall;
    return s;
}

Supervisor Supervisor::explicit_table(std::vector<std::string> alphabet, std::map<EventString, Enablement> table,
                                      Degree fallback)
{
    for (const auto& [str, row] : table) {
        for (const auto& e : str)
            if (std::find(alphabet.begin(), alphabet.end(), e) == alphabet.end())
                throw UnknownEvent(e);
        for (const auto& [e, d] : row)
            if (std::find(alphabet.begin(), alphabet.end(), e) == alphabet.end())
                throw UnknownEvent(e);
    }
    Supervisor s;
    s.mode_ = Mode::Explicit;
    s.alphabet_ = std::move(alphabet);
    s.table_ = std::move(table);
    s.fallback_ = std::move(fallback);
    return s;
}

Degree Supervisor::enablement(const EventString& s, const std::string& event) const
{
    if (std::find(alphabet_.begin(), alphabet_.end(), event) == alphabet_.end())
        throw UnknownEvent(event);
    if (mode_ == Mode::Explicit) {
        for (const auto& e : s)
            if (std::find(alphabet_.begin(), alphabet_.end(), e) == alphabet_.end())
                throw UnknownEvent(e);
        const auto row = table_.find(s);
        if (row == table_.end())
            return fallback_;
        const auto cell = row->second.find(event);
        return cell == row->second.end() ? fallback_ : cell->second;
    }

    Degree lg_next;
    Degree prk_next;
    if (mode_ == Mode::SynthesizedFromLanguage) {
        require_known_events(*g_, s);
        lg_next = max_element(g_->step(g_->run(s), event));
        prk_next = (*prk_)(extend(s, event));
    } else if (graph_) {
        std::size_t node = 0;
        for (const auto& e : s)
            node = graph_->successor(node, e);
        const auto& next = graph_->nodes[graph_->successor(node, event)];
        lg_next = max_element(next[0]);
        prk_next = max_element(next[1]);
    } else {
        require_known_events(*g_, s);
        lg_next = max_element(g_->step(g_->run(s), event));
        prk_next = max_element(h_->step(h_->run(s), event));
    }
    const Degree& uc = attrs_.uncontrollability(event);
    return uc >= prk_next ? std::min(uc, lg_next) : prk_next;
}

Supervisor::Enablement Supervisor::enablement(const EventString& s) const
{
    Enablement out;
    for (const auto& e : alphabet_)
        out.emplace(e, enablement(s, e));
    return out;
}

AdmissibilityResult check_admissibility(const Supervisor& sup, const FuzzyAutomaton& g, const EventAttributes& attrs,
                                        std::size_t n)
{
    attrs.require_alphabet(g.alphabet());
    AdmissibilityResult result;
    const auto* graph = sup.pair_graph();
    if (sup.mode() == Supervisor::Mode::SynthesizedFromAutomaton && graph && g.semantics() == Semantics::MaxMin) {
        for (std::size_t node = 0; node < graph->nodes.size(); ++node)
            for (std::size_t e = 0; e < graph->events.size(); ++e) {
                const auto& name = graph->events[e];
                const Degree required = std::min(attrs.uncontrollability(name),
                                                 max_element(graph->nodes[graph->edges[node][e]][0]));
                const Degree enabled = sup.enablement(graph->witness[node], name);
                if (enabled < required) {
                    result.admissible = false;
                    result.counterexample = AdmissibilityResult::Violation{graph->witness[node], name, required, enabled};
                    return result;
                }
            }
        return result;
    }

    result.bound = n;
    struct Item {
        EventString s;
        StateVector q;
    };
    std::vector<Item> layer{{{}, g.initial()}};
    for (std::size_t len = 0; len <= n && !layer.empty(); ++len) {
        std::vector<Item> next;
        for (auto& item : layer)
            for (std::size_t e = 0; e < g.events().size(); ++e) {
                const auto& name = g.events()[e].name;
                StateVector q = g.step(item.q, e);
                const Degree required = std::min(attrs.uncontrollability(name), max_element(q));
                if (required.is_zero())
                    continue;
                const Degree enabled = sup.enablement(item.s, name);
                if (enabled < required) {
                    result.admissible = false;
                    result.counterexample = AdmissibilityResult::Violation{item.s, name, required, enabled};
                    return result;
                }
                if (len < n)
                    next.push_back({extend(item.s, name), std::move(q)});
            }
        layer = std::move(next);
    }
    return result;
}

Degree controlled_generated_degree(const Supervisor& sup, const FuzzyAutomaton& g, const EventString& str)
{
    require_known_events(g, str);
    Degree level = Degree::one();
    StateVector q = g.initial();
    EventString prefix;
    for (const auto& e : str) {
        q = g.step(q, e);
        level = std::min({level, max_element(q), sup.enablement(prefix, e)});
        if (level.is_zero())
            return level;
        prefix.push_back(e);
    }
    return level;
}

Degree controlled_marked_degree(const Supervisor& sup, const FuzzyAutomaton& g, const EventString& str)
{
    return std::min(controlled_generated_degree(sup, g, str), g.marked_degree(str));
}

const char* to_string(BlockingVerdict v)
{
    switch (v) {
    case BlockingVerdict::Nonblocking:
        return "nonblocking";
    case BlockingVerdict::Blocking:
        return "blocking";
    case BlockingVerdict::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

NonblockingReport check_nonblocking(const Supervisor& sup, const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                    const EventAttributes& attrs, std::size_t depth)
{
    require_same_alphabet(g.alphabet(), k.alphabet());
    attrs.require_alphabet(g.alphabet());
    NonblockingReport report;
    report.depth = depth;

    const FuzzyLanguage pk = prefix_closure(k);
    for (const auto& s : shortlex(pk.prefix_support(), g.alphabet())) {
        const Degree lgm = g.marked_degree(s);
        if (report.prefix_in_marked.holds && pk(s) > lgm)
            report.prefix_in_marked = {false, s};
        if (report.condition_a.holds && k(s) != std::min(pk(s), lgm))
            report.condition_a = {false, s};
    }
    if (!k(EventString{}).is_one())
        report.initial_one = {false, EventString{}};
    report.condition_b = check_controllability(g, k, attrs);
    report.admissibility = check_admissibility(sup, g, attrs, depth);

    // Controlled tree to the horizon; zero branches are pruned since they stay zero.
    struct Node {
        EventString s;
        StateVector q;
        Degree level;
        Degree marked;
        Degree prefix_marked;
        std::size_t parent;
    };
    std::vector<Node> nodes;
    nodes.push_back({{}, g.initial(), Degree::one(), std::min(Degree::one(), g.marked_degree_of(g.initial())), {}, 0});
    bool alive_at_horizon = depth == 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].s.size() == depth) {
            alive_at_horizon = true;
            continue;
        }
        for (std::size_t e = 0; e < g.events().size(); ++e) {
            const auto& name = g.events()[e].name;
            StateVector q = g.step(nodes[i].q, e);
            Degree level = std::min({nodes[i].level, max_element(q), sup.enablement(nodes[i].s, name)});
            if (level.is_zero())
                continue;
            Degree marked = std::min(level, g.marked_degree_of(q));
            nodes.push_back({extend(nodes[i].s, name), std::move(q), std::move(level), std::move(marked), {}, i});
        }
    }
    for (auto& n : nodes)
        n.prefix_marked = n.marked;
    for (std::size_t i = nodes.size(); i-- > 1;) {
        auto& parent = nodes[nodes[i].parent];
        if (parent.prefix_marked < nodes[i].prefix_marked)
            parent.prefix_marked = nodes[i].prefix_marked;
    }
    report.exhaustive = !alive_at_horizon;
    for (const auto& n : nodes)
        if (n.level != n.prefix_marked) {
            report.direct = report.exhaustive ? BlockingVerdict::Blocking : BlockingVerdict::Inconclusive;
            report.blocking_witness = n.s;
            report.witness_generated = n.level;
            report.witness_prefix_marked = n.prefix_marked;
            break;
        }
    return report;
}

std::vector<std::string> crisp_active_events(const FuzzyAutomaton& h, const EventString& s)
{
    if (!h.is_crisp())
        throw NotCrisp("active events need a crisp automaton");
    const StateVector q = h.run(s);
    if (max_element(q).is_zero())
        throw StringNotInLanguage("'" + join_string(s, true) + "' is not generated");
    std::vector<std::string> out;
    for (std::size_t e = 0; e < h.events().size(); ++e)
        if (!max_element(h.step(q, e)).is_zero())
            out.push_back(h.events()[e].name);
    return out;
}

} // namespace fdes
