#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fdes/attributes.hpp"
#include "fdes/automaton.hpp"

namespace fdes {

/// Fuzzy language with finite support. Unlisted strings have degree 0.
class FuzzyLanguage {
public:
    FuzzyLanguage() = default;
    explicit FuzzyLanguage(std::vector<std::string> alphabet);
    FuzzyLanguage(std::vector<std::string> alphabet, const std::map<EventString, Degree>& degrees);

    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }

    Degree operator()(const EventString& s) const;
    /// Throws UnknownEvent for symbols outside the alphabet. Zero erases.
    void set(const EventString& s, const Degree& d);

    /// Strings with nonzero degree.
    const std::map<EventString, Degree>& entries() const noexcept { return degrees_; }
    bool empty() const noexcept { return degrees_.empty(); }
    /// Every prefix of every supported string; always contains ε.
    std::set<EventString> prefix_support() const;

    /// Pointwise containment.
    bool subset_of(const FuzzyLanguage& other) const;
    bool same_alphabet(const FuzzyLanguage& other) const;

    friend bool operator==(const FuzzyLanguage& a, const FuzzyLanguage& b);

private:
    std::vector<std::string> alphabet_;
    std::map<EventString, Degree> degrees_;
};

/// Degrees occurring in a problem, plus 0 and 1, sorted and deduplicated.
struct ValueLattice {
    std::vector<Degree> values;

    static ValueLattice of(const std::vector<const FuzzyLanguage*>& languages, const EventAttributes& attrs);
};

/// All strings of length at most n, shortest first, then in alphabet order.
std::vector<EventString> strings_up_to(const std::vector<std::string>& alphabet, std::size_t n);

FuzzyLanguage prefix_closure(const FuzzyLanguage& l);
bool is_prefix_closed(const FuzzyLanguage& l);

/// Pointwise min / max. Throws AlphabetMismatch.
FuzzyLanguage fuzzy_and(const FuzzyLanguage& a, const FuzzyLanguage& b);
FuzzyLanguage fuzzy_or(const FuzzyLanguage& a, const FuzzyLanguage& b);

struct LanguageViolation {
    EventString s;
    std::string event;
    Degree lhs;
    Degree rhs;
};

struct ControllabilityVerdict {
    bool controllable = true;
    std::optional<LanguageViolation> counterexample;
};

/// min(pr(k)(s), uc(σ), m(sσ)) <= pr(k)(sσ) for all s, σ.
/// Throws MNotPrefixClosed.
ControllabilityVerdict is_controllable_wrt(const FuzzyLanguage& k, const FuzzyLanguage& m,
                                           const EventAttributes& attrs);

/// Largest controllable sublanguage of k. Throws MNotPrefixClosed.
FuzzyLanguage supremal_controllable_sublanguage(const FuzzyLanguage& k, const FuzzyLanguage& m,
                                                const EventAttributes& attrs);

/// Smallest prefix-closed controllable language between k and m.
/// Throws MNotPrefixClosed or KNotContainedInM.
FuzzyLanguage infimal_prefix_closed_superlanguage(const FuzzyLanguage& k, const FuzzyLanguage& m,
                                                  const EventAttributes& attrs);

/// Generated (or marked) language of g restricted to strings of length <= depth.
FuzzyLanguage generated_language(const FuzzyAutomaton& g, std::size_t depth);
FuzzyLanguage marked_language(const FuzzyAutomaton& g, std::size_t depth);

} // namespace fdes
