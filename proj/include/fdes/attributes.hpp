#pragma once

#include <map>
#include <string>
#include <vector>

#include "fdes/degree.hpp"

namespace fdes {

/// Per-event degree of uncontrollability; controllability is its complement.
class EventAttributes {
public:
    EventAttributes() = default;
    explicit EventAttributes(std::map<std::string, Degree> uncontrollability);

    static EventAttributes uniform(const std::vector<std::string>& alphabet, const Degree& uc);

    /// Throws UnknownEvent.
    const Degree& uncontrollability(const std::string& event) const;
    Degree controllability(const std::string& event) const;

    const std::map<std::string, Degree>& map() const noexcept { return uc_; }

    /// Throws AlphabetMismatch unless the key set equals the alphabet.
    void require_alphabet(const std::vector<std::string>& alphabet) const;

    friend bool operator==(const EventAttributes&, const EventAttributes&) = default;

private:
    std::map<std::string, Degree> uc_;
};

} // namespace fdes
