#include "fdes/attributes.hpp"

#include <set>

#include "fdes/errors.hpp"

namespace fdes {

EventAttributes::EventAttributes(std::map<std::string, Degree> uncontrollability) : uc_(std::move(uncontrollability)) {}

EventAttributes EventAttributes::uniform(const std::vector<std::string>& alphabet, const Degree& uc)
{
    std::map<std::string, Degree> m;
    for (const auto& e : alphabet)
        m.emplace(e, uc);
    return EventAttributes(std::move(m));
}

const Degree& EventAttributes::uncontrollability(const std::string& event) const
{
    const auto it = uc_.find(event);
    if (it == uc_.end())
        throw UnknownEvent(event);
    return it->second;
}

Degree EventAttributes::controllability(const std::string& event) const
{
    return uncontrollability(event).complement();
}

void EventAttributes::require_alphabet(const std::vector<std::string>& alphabet) const
{
    const std::set<std::string> want(alphabet.begin(), alphabet.end());
    std::set<std::string> have;
    for (const auto& [k, v] : uc_)
        have.insert(k);
    if (want == have)
        return;
    for (const auto& e : want)
        if (!have.count(e))
            throw AlphabetMismatch("no uncontrollability degree for event '" + e + "'");
    for (const auto& e : have)
        if (!want.count(e))
            throw AlphabetMismatch("uncontrollability given for unknown event '" + e + "'");
}

} // namespace fdes
