#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdes/automaton.hpp"
#include "fdes/errors.hpp"

namespace fdes {

/// One state vector, or a (plant, specification) pair of them.
using Label = std::vector<StateVector>;

std::string format_label(const Label& label);

/// Raised when a max-product enumeration is still producing new labels at the
/// depth cap.
class DepthExceeded : public Error {
public:
    DepthExceeded(std::size_t depth, std::vector<Label> frontier);

    std::size_t depth() const noexcept { return depth_; }
    const std::vector<Label>& frontier() const noexcept { return frontier_; }

private:
    std::size_t depth_;
    std::vector<Label> frontier_;
};

/// Cap used for max-product enumeration: FDES_DEPTH_DEFAULT if set, else 32.
std::size_t default_depth_cap();

struct ReachOptions {
    /// Only consulted for max-product automata. Unset means default_depth_cap().
    std::optional<std::size_t> max_depth;
    /// Guard against exponential computing trees.
    std::size_t node_budget = 500000;
};

struct ComputingTreeNode {
    Label label;
    std::optional<std::string> incoming_event;
    std::vector<ComputingTreeNode> children;
    bool is_leaf = false;
};

struct ReachableStateGraph {
    std::vector<std::string> events;
    std::vector<Label> nodes;
    /// edges[node][event index] = successor node.
    std::vector<std::vector<std::size_t>> edges;
    std::vector<EventString> witness;

    std::optional<std::size_t> find(const Label& label) const;
    std::size_t successor(std::size_t node, const std::string& event) const;
};

struct StateClassAutomaton {
    ReachableStateGraph graph;
    std::size_t accepting = 0;

    /// True iff the string drives the initial node to the accepting node.
    bool accepts(const EventString& s) const;
};

ComputingTreeNode build_computing_tree(const FuzzyAutomaton& g, const ReachOptions& options = {});
ComputingTreeNode build_pair_tree(const FuzzyAutomaton& g, const FuzzyAutomaton& h,
                                  const ReachOptions& options = {});

ReachableStateGraph enumerate_states(const FuzzyAutomaton& g, const ReachOptions& options = {});
/// Requires equal event sets and semantics; h's events are matched by name.
ReachableStateGraph enumerate_pairs(const FuzzyAutomaton& g, const FuzzyAutomaton& h,
                                    const ReachOptions& options = {});

StateClassAutomaton class_automaton(const ReachableStateGraph& graph, const Label& target);
StateClassAutomaton class_automaton(const ReachableStateGraph& graph, const StateVector& target);

std::size_t count_nodes(const ComputingTreeNode& root);
std::size_t count_leaves(const ComputingTreeNode& root);
/// Distinct labels in first-visit (preorder) order.
std::vector<Label> distinct_labels(const ComputingTreeNode& root);

std::string tree_to_dot(const ComputingTreeNode& root);
std::string graph_to_dot(const ReachableStateGraph& graph);

} // namespace fdes
