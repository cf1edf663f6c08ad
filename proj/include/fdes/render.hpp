#pragma once

#include <string>
#include <vector>

#include "fdes/language.hpp"
#include "fdes/reachability.hpp"
#include "fdes/supervisory.hpp"

namespace fdes {

/// Pipe-delimited table with columns padded to equal width in code points.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header);
    void add(std::vector<std::string> row);
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Display width of a UTF-8 string, counted in code points.
std::size_t display_width(const std::string& s);

/// Concatenated event names, "ε" for the empty string.
std::string display_string(const EventString& s);

std::string render_states(const ReachableStateGraph& g);
std::string render_tree(const ComputingTreeNode& root);
std::string render_report(const ControllabilityReport& r);
std::string render_nonblocking(const NonblockingReport& r);
std::string render_supervisor(const Supervisor& s);
std::string render_language(const FuzzyLanguage& l);

} // namespace fdes
