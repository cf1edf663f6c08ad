#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdes/attributes.hpp"
#include "fdes/automaton.hpp"
#include "fdes/language.hpp"
#include "fdes/reachability.hpp"

namespace fdes {

struct ControllabilityRow {
    EventString representative;
    std::string event;
    Degree prK_s;
    Degree LG_s_sigma;
    Degree sigma_uc;
    Degree lhs;
    Degree prK_s_sigma;
    bool verdict = true;
};

struct ControllabilityReport {
    std::vector<ControllabilityRow> rows;
    bool overall = true;
    /// Index into rows of the first failing row.
    std::optional<std::size_t> counterexample;
    std::vector<std::string> warnings;
    /// Set for the length-bounded check.
    std::optional<std::size_t> bound;
    /// False when K came in as a finite-support language.
    bool spec_is_automaton = true;

    const ControllabilityRow* first_failure() const
    {
        return counterexample ? &rows[*counterexample] : nullptr;
    }
};

struct CheckOptions {
    /// Stop once the representative holding the first failing row is done.
    bool first_failure = false;
    ReachOptions reach;
    /// Called with the running row count during long checks.
    std::function<void(std::size_t)> progress;
};

/// Builds a row from the four quantities; lhs and verdict are derived.
ControllabilityRow make_row(EventString s, std::string event, Degree prK_s, Degree LG_s_sigma, Degree sigma_uc,
                            Degree prK_s_sigma);

/// Exact check over the reachable pair graph of (g, h), where h generates pr(K).
/// Both automata must be max-min.
ControllabilityReport check_controllability(const FuzzyAutomaton& g, const FuzzyAutomaton& h,
                                            const EventAttributes& attrs, const CheckOptions& options = {});

/// Exact check with K given as a finite-support language; rows range over
/// the prefix support of k.
ControllabilityReport check_controllability(const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                            const EventAttributes& attrs, const CheckOptions& options = {});

/// Direct enumeration of every string of length <= n; works for both semantics.
ControllabilityReport check_n_controllability(const FuzzyAutomaton& g, const FuzzyAutomaton& h,
                                              const EventAttributes& attrs, std::size_t n,
                                              const CheckOptions& options = {});
ControllabilityReport check_n_controllability(const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                              const EventAttributes& attrs, std::size_t n,
                                              const CheckOptions& options = {});

/// (sum_{i=0..n} |Σ|^i) * |Σ|
std::size_t n_controllability_row_count(std::size_t alphabet_size, std::size_t n);

struct SufficientConditionResult {
    bool holds = true;
    std::optional<LanguageViolation> counterexample;
};

/// k(sσ) >= min(uc(σ), L_G(sσ)) for every s in the prefix support of k.
SufficientConditionResult check_sufficient_condition(const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                                     const EventAttributes& attrs);

class Supervisor {
public:
    enum class Mode { SynthesizedFromAutomaton, SynthesizedFromLanguage, Explicit };

    using Enablement = std::map<std::string, Degree>;

    /// Enablement from the plant g and the automaton h generating pr(K).
    static Supervisor synthesize(const FuzzyAutomaton& g, const FuzzyAutomaton& h, const EventAttributes& attrs,
                                 const CheckOptions& options = {});
    /// Enablement from the plant g and the finite-support language k.
    static Supervisor synthesize(const FuzzyAutomaton& g, const FuzzyLanguage& k, const EventAttributes& attrs,
                                 const CheckOptions& options = {});
    /// Listed (s, σ) pairs take the given degree; everything else takes `fallback`.
    static Supervisor explicit_table(std::vector<std::string> alphabet, std::map<EventString, Enablement> table,
                                     Degree fallback = Degree::zero());

    Mode mode() const noexcept { return mode_; }
    bool synthesized() const noexcept { return mode_ != Mode::Explicit; }
    /// Synthesized although the controllability check failed.
    bool warning() const noexcept { return warning_; }
    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }

    Degree enablement(const EventString& s, const std::string& event) const;
    Enablement enablement(const EventString& s) const;

    /// For the automaton mode: the pair graph that the enablement factors through.
    const ReachableStateGraph* pair_graph() const noexcept { return graph_ ? graph_.get() : nullptr; }
    /// For the explicit mode.
    const std::map<EventString, Enablement>& table() const noexcept { return table_; }
    const Degree& fallback() const noexcept { return fallback_; }
    /// For the language mode.
    const FuzzyLanguage* prefix_language() const noexcept { return prk_ ? prk_.get() : nullptr; }

private:
    Supervisor() = default;

    Degree prk(const EventString& s) const;

    Mode mode_ = Mode::Explicit;
    bool warning_ = false;
    std::vector<std::string> alphabet_;
    std::shared_ptr<const FuzzyAutomaton> g_;
    std::shared_ptr<const FuzzyAutomaton> h_;
    std::shared_ptr<const FuzzyLanguage> prk_;
    std::shared_ptr<const ReachableStateGraph> graph_;
    EventAttributes attrs_;
    std::map<EventString, Enablement> table_;
    Degree fallback_;
};

struct AdmissibilityResult {
    bool admissible = true;
    /// Unset when the check covered every string.
    std::optional<std::size_t> bound;
    struct Violation {
        EventString s;
        std::string event;
        Degree required;
        Degree enabled;
    };
    std::optional<Violation> counterexample;
};

/// min(uc(σ), L_G(sσ)) <= S(s)(σ). Exhaustive for a supervisor synthesized
/// over a max-min pair graph, otherwise checked for |s| <= n.
AdmissibilityResult check_admissibility(const Supervisor& s, const FuzzyAutomaton& g, const EventAttributes& attrs,
                                        std::size_t n);

Degree controlled_generated_degree(const Supervisor& s, const FuzzyAutomaton& g, const EventString& str);
Degree controlled_marked_degree(const Supervisor& s, const FuzzyAutomaton& g, const EventString& str);

enum class BlockingVerdict { Nonblocking, Blocking, Inconclusive };
const char* to_string(BlockingVerdict v);

struct NonblockingReport {
    struct Condition {
        bool holds = true;
        std::optional<EventString> witness;
    };
    /// pr(K) is contained in L_{G,m}.
    Condition prefix_in_marked;
    /// K(ε) = 1.
    Condition initial_one;
    /// K = pr(K) AND L_{G,m}.
    Condition condition_a;
    /// Controllability of K.
    ControllabilityReport condition_b;
    AdmissibilityResult admissibility;

    BlockingVerdict direct = BlockingVerdict::Nonblocking;
    /// True when the controlled language dies out within the depth, so the
    /// direct verdict covers every string.
    bool exhaustive = false;
    std::size_t depth = 0;
    std::optional<EventString> blocking_witness;
    Degree witness_generated;
    Degree witness_prefix_marked;

    bool preconditions_hold() const { return prefix_in_marked.holds && initial_one.holds; }
    bool theorem_conditions_hold() const { return condition_a.holds && condition_b.overall; }
};

NonblockingReport check_nonblocking(const Supervisor& s, const FuzzyAutomaton& g, const FuzzyLanguage& k,
                                    const EventAttributes& attrs, std::size_t depth);

/// Events with a nonzero transition out of the current crisp state set.
/// Throws NotCrisp or StringNotInLanguage.
std::vector<std::string> crisp_active_events(const FuzzyAutomaton& h, const EventString& s);

} // namespace fdes
