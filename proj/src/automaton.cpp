#include "fdes/automaton.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fdes/errors.hpp"

namespace fdes {

std::string join_string(const EventString& s, bool epsilon)
{
    if (s.empty())
        return epsilon ? "ε" : "";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != 0)
            out += ' ';
        out += s[i];
    }
    return out;
}

EventString split_string(const std::string& text)
{
    EventString out;
    std::istringstream in(text);
    std::string token;
    while (in >> token)
        if (token != "ε")
            out.push_back(token);
    return out;
}

FuzzyAutomaton::FuzzyAutomaton(std::vector<std::string> state_labels, std::vector<Event> events,
                               StateVector initial, std::vector<StateVector> marked, Semantics semantics)
    : state_labels_(std::move(state_labels)), events_(std::move(events)), initial_(std::move(initial)),
      marked_(std::move(marked)), semantics_(semantics)
{
    const std::size_t n = initial_.size();
    if (n == 0)
        throw ShapeError("automaton needs at least one state");
    if (state_labels_.empty())
        for (std::size_t i = 0; i < n; ++i)
            state_labels_.push_back("q" + std::to_string(i));
    if (state_labels_.size() != n)
        throw ShapeError("initial vector has " + std::to_string(n) + " entries for "
                         + std::to_string(state_labels_.size()) + " states");
    std::set<std::string> seen;
    for (const auto& e : events_) {
        if (e.name.empty() || e.name.find_first_of(" \t\n") != std::string::npos)
            throw ParseError("event names must be non-empty and contain no whitespace", e.name);
        if (!seen.insert(e.name).second)
            throw ParseError("duplicate event", e.name);
        if (e.matrix.rows() != n || e.matrix.cols() != n)
            throw ShapeError("event '" + e.name + "' is " + std::to_string(e.matrix.rows()) + "x"
                             + std::to_string(e.matrix.cols()) + ", expected " + std::to_string(n) + "x"
                             + std::to_string(n));
    }
    for (const auto& m : marked_)
        if (m.size() != n)
            throw ShapeError("marked vector has " + std::to_string(m.size()) + " entries, expected "
                             + std::to_string(n));
}

std::vector<std::string> FuzzyAutomaton::alphabet() const
{
    std::vector<std::string> out;
    for (const auto& e : events_)
        out.push_back(e.name);
    return out;
}

bool FuzzyAutomaton::has_event(const std::string& name) const { return event_index(name).has_value(); }

std::optional<std::size_t> FuzzyAutomaton::event_index(const std::string& name) const
{
    for (std::size_t i = 0; i < events_.size(); ++i)
        if (events_[i].name == name)
            return i;
    return std::nullopt;
}

const Matrix& FuzzyAutomaton::matrix(const std::string& name) const
{
    const auto idx = event_index(name);
    if (!idx)
        throw UnknownEvent(name);
    return events_[*idx].matrix;
}

StateVector FuzzyAutomaton::step(const StateVector& q, const std::string& event) const
{
    return apply(q, matrix(event), semantics_);
}

StateVector FuzzyAutomaton::step(const StateVector& q, std::size_t event_index) const
{
    return apply(q, events_.at(event_index).matrix, semantics_);
}

StateVector FuzzyAutomaton::run(const EventString& s) const { return run_from(initial_, s); }

StateVector FuzzyAutomaton::run_from(StateVector q, const EventString& s) const
{
    for (const auto& e : s)
        q = step(q, e);
    return q;
}

Degree FuzzyAutomaton::generated_degree(const EventString& s) const { return max_element(run(s)); }

Degree FuzzyAutomaton::marked_degree_of(const StateVector& q) const
{
    Degree best;
    for (const auto& m : marked_) {
        Degree d = inner_sup(q, m, semantics_);
        if (best < d)
            best = std::move(d);
    }
    return best;
}

Degree FuzzyAutomaton::marked_degree(const EventString& s) const { return marked_degree_of(run(s)); }

bool FuzzyAutomaton::is_crisp() const
{
    auto crisp = [](const Degree& d) { return d.is_zero() || d.is_one(); };
    if (!std::all_of(initial_.begin(), initial_.end(), crisp))
        return false;
    for (const auto& m : marked_)
        if (!std::all_of(m.begin(), m.end(), crisp))
            return false;
    for (const auto& e : events_)
        if (!std::all_of(e.matrix.data().begin(), e.matrix.data().end(), crisp))
            return false;
    return true;
}

bool operator==(const FuzzyAutomaton& a, const FuzzyAutomaton& b)
{
    if (a.semantics_ != b.semantics_ || a.state_labels_ != b.state_labels_ || a.initial_ != b.initial_
        || a.marked_ != b.marked_ || a.events_.size() != b.events_.size())
        return false;
    for (std::size_t i = 0; i < a.events_.size(); ++i)
        if (a.events_[i].name != b.events_[i].name || !(a.events_[i].matrix == b.events_[i].matrix))
            return false;
    return true;
}

namespace {

std::vector<std::string> pair_labels(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2)
{
    std::vector<std::string> out;
    for (const auto& a : g1.state_labels())
        for (const auto& b : g2.state_labels())
            out.push_back("(" + a + "," + b + ")");
    return out;
}

std::vector<std::string> union_alphabet(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2)
{
    auto out = g1.alphabet();
    for (const auto& e : g2.alphabet())
        if (!g1.has_event(e))
            out.push_back(e);
    return out;
}

} // namespace

FuzzyAutomaton parallel_compose(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2)
{
    if (g1.semantics() != g2.semantics())
        throw SemanticsMismatch(std::string("cannot compose ") + to_string(g1.semantics()) + " with "
                                + to_string(g2.semantics()));
    const Matrix i1 = Matrix::identity(g1.size());
    const Matrix i2 = Matrix::identity(g2.size());

    std::vector<FuzzyAutomaton::Event> events;
    for (const auto& name : union_alphabet(g1, g2)) {
        const bool in1 = g1.has_event(name);
        const bool in2 = g2.has_event(name);
        const Matrix& a = in1 ? g1.matrix(name) : i1;
        const Matrix& b = in2 ? g2.matrix(name) : i2;
        events.push_back({name, tensor(a, b)});
    }

    std::vector<StateVector> marked;
    for (const auto& m1 : g1.marked())
        for (const auto& m2 : g2.marked())
            marked.push_back(tensor(m1, m2));

    return FuzzyAutomaton(pair_labels(g1, g2), std::move(events), tensor(g1.initial(), g2.initial()),
                          std::move(marked), g1.semantics());
}

FuzzyAutomaton crisp_parallel_reference(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2)
{
    if (!g1.is_crisp() || !g2.is_crisp())
        throw NotCrisp("crisp product needs degrees in {0,1}");
    const std::size_t n1 = g1.size();
    const std::size_t n2 = g2.size();
    const std::size_t n = n1 * n2;
    auto index = [n2](std::size_t x, std::size_t y) { return x * n2 + y; };

    std::vector<FuzzyAutomaton::Event> events;
    for (const auto& name : union_alphabet(g1, g2)) {
        const bool in1 = g1.has_event(name);
        const bool in2 = g2.has_event(name);
        Matrix m(n, n);
        for (std::size_t x = 0; x < n1; ++x)
            for (std::size_t y = 0; y < n2; ++y)
                for (std::size_t x2 = 0; x2 < n1; ++x2)
                    for (std::size_t y2 = 0; y2 < n2; ++y2) {
                        const bool move1 = in1 ? g1.matrix(name)(x, x2).is_one() : x == x2;
                        const bool move2 = in2 ? g2.matrix(name)(y, y2).is_one() : y == y2;
                        if (move1 && move2)
                            m(index(x, y), index(x2, y2)) = Degree::one();
                    }
        events.push_back({name, std::move(m)});
    }

    StateVector initial(n);
    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t y = 0; y < n2; ++y)
            if (g1.initial()[x].is_one() && g2.initial()[y].is_one())
                initial[index(x, y)] = Degree::one();

    std::vector<StateVector> marked;
    for (const auto& m1 : g1.marked())
        for (const auto& m2 : g2.marked()) {
            StateVector v(n);
            for (std::size_t x = 0; x < n1; ++x)
                for (std::size_t y = 0; y < n2; ++y)
                    if (m1[x].is_one() && m2[y].is_one())
                        v[index(x, y)] = Degree::one();
            marked.push_back(std::move(v));
        }

    return FuzzyAutomaton(pair_labels(g1, g2), std::move(events), std::move(initial), std::move(marked),
                          g1.semantics());
}

} // namespace fdes
