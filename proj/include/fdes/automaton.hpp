#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdes/algebra.hpp"

namespace fdes {

/// Sequence of event names; empty is the empty string.
using EventString = std::vector<std::string>;

/// "a1 a2", or "ε" for the empty string when `epsilon` is set.
std::string join_string(const EventString& s, bool epsilon = false);
EventString split_string(const std::string& text);

class FuzzyAutomaton {
public:
    struct Event {
        std::string name;
        Matrix matrix;
    };

    FuzzyAutomaton() = default;

    /// Validates shapes and event-name uniqueness; throws ShapeError or ParseError.
    FuzzyAutomaton(std::vector<std::string> state_labels, std::vector<Event> events, StateVector initial,
                   std::vector<StateVector> marked, Semantics semantics);

    std::size_t size() const noexcept { return initial_.size(); }
    Semantics semantics() const noexcept { return semantics_; }
    const std::vector<std::string>& state_labels() const noexcept { return state_labels_; }
    const std::vector<Event>& events() const noexcept { return events_; }
    const StateVector& initial() const noexcept { return initial_; }
    const std::vector<StateVector>& marked() const noexcept { return marked_; }

    std::vector<std::string> alphabet() const;
    bool has_event(const std::string& name) const;
    std::optional<std::size_t> event_index(const std::string& name) const;
    /// Throws UnknownEvent.
    const Matrix& matrix(const std::string& name) const;

    StateVector step(const StateVector& q, const std::string& event) const;
    StateVector step(const StateVector& q, std::size_t event_index) const;
    StateVector run(const EventString& s) const;
    StateVector run_from(StateVector q, const EventString& s) const;

    Degree generated_degree(const EventString& s) const;
    /// Marked degree of an already-computed state vector.
    Degree marked_degree_of(const StateVector& q) const;
    Degree marked_degree(const EventString& s) const;

    /// All degrees are 0 or 1.
    bool is_crisp() const;

    friend bool operator==(const FuzzyAutomaton&, const FuzzyAutomaton&);

private:
    std::vector<std::string> state_labels_;
    std::vector<Event> events_;
    StateVector initial_;
    std::vector<StateVector> marked_;
    Semantics semantics_ = Semantics::MaxMin;
};

/// Parallel composition over the union of alphabets. Events private to one
/// side are lifted with an identity factor. Throws SemanticsMismatch.
FuzzyAutomaton parallel_compose(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2);

/// Textbook synchronous product computed on crisp state pairs, encoded back
/// as matrices. Throws NotCrisp.
FuzzyAutomaton crisp_parallel_reference(const FuzzyAutomaton& g1, const FuzzyAutomaton& g2);

} // namespace fdes
