#include "fdes/language.hpp"

#include <algorithm>

#include "fdes/errors.hpp"

namespace fdes {

FuzzyLanguage::FuzzyLanguage(std::vector<std::string> alphabet) : alphabet_(std::move(alphabet)) {}

FuzzyLanguage::FuzzyLanguage(std::vector<std::string> alphabet, const std::map<EventString, Degree>& degrees)
    : alphabet_(std::move(alphabet))
{
    for (const auto& [s, d] : degrees)
        set(s, d);
}

Degree FuzzyLanguage::operator()(const EventString& s) const
{
    const auto it = degrees_.find(s);
    return it == degrees_.end() ? Degree::zero() : it->second;
}

void FuzzyLanguage::set(const EventString& s, const Degree& d)
{
    for (const auto& e : s)
        if (std::find(alphabet_.begin(), alphabet_.end(), e) == alphabet_.end())
            throw UnknownEvent(e);
    if (d.is_zero())
        degrees_.erase(s);
    else
        degrees_[s] = d;
}

std::set<EventString> FuzzyLanguage::prefix_support() const
{
    std::set<EventString> out{EventString{}};
    for (const auto& [s, d] : degrees_)
        for (std::size_t len = 1; len <= s.size(); ++len)
            out.emplace(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
    return out;
}

bool FuzzyLanguage::subset_of(const FuzzyLanguage& other) const
{
    return std::all_of(degrees_.begin(), degrees_.end(),
                       [&](const auto& entry) { return entry.second <= other(entry.first); });
}

bool FuzzyLanguage::same_alphabet(const FuzzyLanguage& other) const
{
    return std::set<std::string>(alphabet_.begin(), alphabet_.end())
           == std::set<std::string>(other.alphabet_.begin(), other.alphabet_.end());
}

bool operator==(const FuzzyLanguage& a, const FuzzyLanguage& b)
{
    return a.same_alphabet(b) && a.degrees_ == b.degrees_;
}

ValueLattice ValueLattice::of(const std::vector<const FuzzyLanguage*>& languages, const EventAttributes& attrs)
{
    std::set<Degree> values{Degree::zero(), Degree::one()};
    for (const auto* l : languages)
        for (const auto& [s, d] : l->entries())
            values.insert(d);
    for (const auto& [e, d] : attrs.map())
        values.insert(d);
    return {std::vector<Degree>(values.begin(), values.end())};
}

std::vector<EventString> strings_up_to(const std::vector<std::string>& alphabet, std::size_t n)
{
    std::vector<EventString> out{EventString{}};
    std::size_t layer_begin = 0;
    for (std::size_t len = 1; len <= n; ++len) {
        const std::size_t layer_end = out.size();
        for (std::size_t i = layer_begin; i < layer_end; ++i)
            for (const auto& e : alphabet) {
                EventString s = out[i];
                s.push_back(e);
                out.push_back(std::move(s));
            }
        layer_begin = layer_end;
    }
    return out;
}

FuzzyLanguage prefix_closure(const FuzzyLanguage& l)
{
    FuzzyLanguage out(l.alphabet());
    std::map<EventString, Degree> best;
    for (const auto& [s, d] : l.entries())
        for (std::size_t len = 0; len <= s.size(); ++len) {
            EventString p(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
            auto& slot = best[p];
            if (slot < d)
                slot = d;
        }
    for (const auto& [s, d] : best)
        out.set(s, d);
    return out;
}

bool is_prefix_closed(const FuzzyLanguage& l) { return prefix_closure(l) == l; }

namespace {

void require_same_alphabet(const FuzzyLanguage& a, const FuzzyLanguage& b)
{
    if (!a.same_alphabet(b))
        throw AlphabetMismatch("languages are over different alphabets");
}

void require_prefix_closed(const FuzzyLanguage& m)
{
    if (!is_prefix_closed(m))
        throw MNotPrefixClosed("the reference language must be prefix-closed");
}

EventString extend(const EventString& s, const std::string& e)
{
    EventString out = s;
    out.push_back(e);
    return out;
}

bool is_prefix(const EventString& p, const EventString& s)
{
    return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}

std::optional<LanguageViolation> first_violation(const FuzzyLanguage& k, const FuzzyLanguage& m,
                                                 const EventAttributes& attrs)
{
    const FuzzyLanguage pk = prefix_closure(k);
    for (const auto& s : pk.prefix_support())
        for (const auto& e : k.alphabet()) {
            const EventString se = extend(s, e);
            const Degree lhs = std::min({pk(s), attrs.uncontrollability(e), m(se)});
            const Degree rhs = pk(se);
            if (lhs > rhs)
                return LanguageViolation{s, e, lhs, rhs};
        }
    return std::nullopt;
}

} // namespace

FuzzyLanguage fuzzy_and(const FuzzyLanguage& a, const FuzzyLanguage& b)
{
    require_same_alphabet(a, b);
    FuzzyLanguage out(a.alphabet());
    for (const auto& [s, d] : a.entries())
        out.set(s, std::min(d, b(s)));
    return out;
}

FuzzyLanguage fuzzy_or(const FuzzyLanguage& a, const FuzzyLanguage& b)
{
    require_same_alphabet(a, b);
    FuzzyLanguage out = a;
    for (const auto& [s, d] : b.entries())
        out.set(s, std::max(d, a(s)));
    return out;
}

ControllabilityVerdict is_controllable_wrt(const FuzzyLanguage& k, const FuzzyLanguage& m,
                                           const EventAttributes& attrs)
{
    require_prefix_closed(m);
    ControllabilityVerdict verdict;
    verdict.counterexample = first_violation(k, m, attrs);
    verdict.controllable = !verdict.counterexample.has_value();
    return verdict;
}

FuzzyLanguage supremal_controllable_sublanguage(const FuzzyLanguage& k, const FuzzyLanguage& m,
                                                const EventAttributes& attrs)
{
    require_prefix_closed(m);
    FuzzyLanguage f = k;
    while (const auto v = first_violation(f, m, attrs)) {
        const Degree cap = v->rhs;
        FuzzyLanguage next(f.alphabet());
        for (const auto& [t, d] : f.entries())
            next.set(t, is_prefix(v->s, t) ? std::min(d, cap) : d);
        f = std::move(next);
    }
    return f;
}

FuzzyLanguage infimal_prefix_closed_superlanguage(const FuzzyLanguage& k, const FuzzyLanguage& m,
                                                  const EventAttributes& attrs)
{
    require_prefix_closed(m);
    if (!k.subset_of(m))
        throw KNotContainedInM("the language is not contained in the reference language");
    FuzzyLanguage g = prefix_closure(k);
    bool changed = true;
    while (changed) {
        changed = false;
        const auto entries = g.entries();
        for (const auto& [s, gs] : entries)
            for (const auto& e : g.alphabet()) {
                const EventString se = extend(s, e);
                const Degree raised = std::min({gs, attrs.uncontrollability(e), m(se)});
                if (raised > g(se)) {
                    g.set(se, raised);
                    changed = true;
                }
            }
    }
    return g;
}

namespace {

FuzzyLanguage sample_language(const FuzzyAutomaton& g, std::size_t depth, bool marked)
{
    FuzzyLanguage out(g.alphabet());
    struct Item {
        EventString s;
        StateVector q;
    };
    std::vector<Item> layer{{{}, g.initial()}};
    for (std::size_t len = 0;; ++len) {
        std::vector<Item> next;
        for (auto& item : layer) {
            out.set(item.s, marked ? g.marked_degree_of(item.q) : max_element(item.q));
            if (len == depth || max_element(item.q).is_zero())
                continue;
            for (std::size_t e = 0; e < g.events().size(); ++e)
                next.push_back({extend(item.s, g.events()[e].name), g.step(item.q, e)});
        }
        if (next.empty())
            break;
        layer = std::move(next);
    }
    return out;
}

} // namespace

FuzzyLanguage generated_language(const FuzzyAutomaton& g, std::size_t depth)
{
    return sample_language(g, depth, false);
}

FuzzyLanguage marked_language(const FuzzyAutomaton& g, std::size_t depth)
{
    return sample_language(g, depth, true);
}

} // namespace fdes
