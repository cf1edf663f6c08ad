#include "fdes/reachability.hpp"

#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace fdes {

std::string format_label(const Label& label)
{
    if (label.size() == 1)
        return format_vector(label.front());
    std::string out = "(";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i != 0)
            out += ",";
        out += format_vector(label[i]);
    }
    return out + ")";
}

DepthExceeded::DepthExceeded(std::size_t depth, std::vector<Label> frontier)
    : Error("reachable set did not close within depth " + std::to_string(depth) + " ("
            + std::to_string(frontier.size()) + " new labels on the frontier)"),
      depth_(depth), frontier_(std::move(frontier))
{
}

std::size_t default_depth_cap()
{
    if (const char* env = std::getenv("FDES_DEPTH_DEFAULT")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0')
            return v;
    }
    return 32;
}

namespace {

/// Steps a tuple of automata in lockstep on a shared alphabet.
class Stepper {
public:
    explicit Stepper(std::vector<const FuzzyAutomaton*> parts) : parts_(std::move(parts))
    {
        const auto& first = *parts_.front();
        events_ = first.alphabet();
        for (const auto* p : parts_) {
            if (p->semantics() != first.semantics())
                throw SemanticsMismatch("automata disagree on semantics");
            const auto other = p->alphabet();
            if (std::set<std::string>(other.begin(), other.end())
                != std::set<std::string>(events_.begin(), events_.end()))
                throw AlphabetMismatch("automata have different event alphabets");
            std::vector<std::size_t> map;
            for (const auto& e : events_)
                map.push_back(*p->event_index(e));
            index_.push_back(std::move(map));
        }
    }

    const std::vector<std::string>& events() const { return events_; }

    Label initial() const
    {
        Label out;
        for (const auto* p : parts_)
            out.push_back(p->initial());
        return out;
    }

    Label step(const Label& from, std::size_t event) const
    {
        Label out;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            out.push_back(parts_[i]->step(from[i], index_[i][event]));
        return out;
    }

    std::optional<std::size_t> cap(const ReachOptions& options) const
    {
        if (parts_.front()->semantics() == Semantics::MaxMin)
            return std::nullopt;
        return options.max_depth ? *options.max_depth : default_depth_cap();
    }

private:
    std::vector<const FuzzyAutomaton*> parts_;
    std::vector<std::string> events_;
    std::vector<std::vector<std::size_t>> index_;
};

struct LabelLess {
    bool operator()(const Label& a, const Label& b) const
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].size() != b[i].size())
                return a[i].size() < b[i].size();
            for (std::size_t j = 0; j < a[i].size(); ++j) {
                const auto c = a[i][j] <=> b[i][j];
                if (c != 0)
                    return c < 0;
            }
        }
        return false;
    }
};

class TreeBuilder {
public:
    TreeBuilder(const Stepper& stepper, const ReachOptions& options)
        : stepper_(stepper), cap_(stepper.cap(options)), budget_(options.node_budget)
    {
    }

    ComputingTreeNode build()
    {
        ComputingTreeNode root{stepper_.initial(), std::nullopt, {}, false};
        ++count_;
        std::vector<const Label*> path;
        expand(root, path, 0);
        if (!frontier_.empty())
            throw DepthExceeded(*cap_, std::move(frontier_));
        return root;
    }

private:
    void expand(ComputingTreeNode& node, std::vector<const Label*>& path, std::size_t depth)
    {
        path.push_back(&node.label);
        node.children.reserve(stepper_.events().size());
        for (std::size_t e = 0; e < stepper_.events().size(); ++e) {
            if (++count_ > budget_)
                throw TreeTooLarge("computing tree exceeds " + std::to_string(budget_) + " nodes");
            ComputingTreeNode child{stepper_.step(node.label, e), stepper_.events()[e], {}, false};
            for (const Label* ancestor : path)
                if (*ancestor == child.label) {
                    child.is_leaf = true;
                    break;
                }
            node.children.push_back(std::move(child));
        }
        for (auto& child : node.children) {
            if (child.is_leaf)
                continue;
            if (cap_ && depth + 1 > *cap_)
                frontier_.push_back(child.label);
            else
                expand(child, path, depth + 1);
        }
        path.pop_back();
    }

    const Stepper& stepper_;
    std::optional<std::size_t> cap_;
    std::size_t budget_;
    std::size_t count_ = 0;
    std::vector<Label> frontier_;
};

ReachableStateGraph breadth_first(const Stepper& stepper, const ReachOptions& options)
{
    const auto cap = stepper.cap(options);
    ReachableStateGraph graph;
    graph.events = stepper.events();
    std::map<Label, std::size_t, LabelLess> index;
    std::vector<std::size_t> depth;

    auto add = [&](Label label, EventString witness, std::size_t d) {
        index.emplace(label, graph.nodes.size());
        graph.nodes.push_back(std::move(label));
        graph.witness.push_back(std::move(witness));
        graph.edges.emplace_back(graph.events.size(), 0);
        depth.push_back(d);
    };

    add(stepper.initial(), {}, 0);
    std::vector<Label> frontier;
    for (std::size_t node = 0; node < graph.nodes.size(); ++node) {
        if (graph.nodes.size() > options.node_budget)
            throw TreeTooLarge("reachable set exceeds " + std::to_string(options.node_budget) + " nodes");
        for (std::size_t e = 0; e < graph.events.size(); ++e) {
            Label next = stepper.step(graph.nodes[node], e);
            const auto it = index.find(next);
            if (it != index.end()) {
                graph.edges[node][e] = it->second;
                continue;
            }
            if (cap && depth[node] >= *cap) {
                frontier.push_back(std::move(next));
                continue;
            }
            EventString w = graph.witness[node];
            w.push_back(graph.events[e]);
            graph.edges[node][e] = graph.nodes.size();
            add(std::move(next), std::move(w), depth[node] + 1);
        }
    }
    if (!frontier.empty())
        throw DepthExceeded(*cap, std::move(frontier));
    return graph;
}

void collect(const ComputingTreeNode& node, std::size_t& nodes, std::size_t& leaves)
{
    ++nodes;
    if (node.is_leaf)
        ++leaves;
    for (const auto& c : node.children)
        collect(c, nodes, leaves);
}

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

void tree_dot(const ComputingTreeNode& node, std::size_t& counter, std::ostringstream& out)
{
    const std::size_t id = counter++;
    out << "  n" << id << " [label=\"" << dot_escape(format_label(node.label)) << "\"";
    if (node.is_leaf)
        out << ", peripheries=2";
    out << "];\n";
    for (const auto& child : node.children) {
        const std::size_t child_id = counter;
        tree_dot(child, counter, out);
        out << "  n" << id << " -> n" << child_id << " [label=\"" << dot_escape(*child.incoming_event)
            << "\"];\n";
    }
}

} // namespace

std::optional<std::size_t> ReachableStateGraph::find(const Label& label) const
{
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == label)
            return i;
    return std::nullopt;
}

std::size_t ReachableStateGraph::successor(std::size_t node, const std::string& event) const
{
    for (std::size_t e = 0; e < events.size(); ++e)
        if (events[e] == event)
            return edges.at(node)[e];
    throw UnknownEvent(event);
}

bool StateClassAutomaton::accepts(const EventString& s) const
{
    std::size_t node = 0;
    for (const auto& e : s)
        node = graph.successor(node, e);
    return node == accepting;
}

ComputingTreeNode build_computing_tree(const FuzzyAutomaton& g, const ReachOptions& options)
{
    Stepper stepper({&g});
    return TreeBuilder(stepper, options).build();
}

ComputingTreeNode build_pair_tree(const FuzzyAutomaton& g, const FuzzyAutomaton& h, const ReachOptions& options)
{
    Stepper stepper({&g, &h});
    return TreeBuilder(stepper, options).build();
}

ReachableStateGraph enumerate_states(const FuzzyAutomaton& g, const ReachOptions& options)
{
    return breadth_first(Stepper({&g}), options);
}

ReachableStateGraph enumerate_pairs(const FuzzyAutomaton& g, const FuzzyAutomaton& h, const ReachOptions& options)
{
    return breadth_first(Stepper({&g, &h}), options);
}

StateClassAutomaton class_automaton(const ReachableStateGraph& graph, const Label& target)
{
    const auto idx = graph.find(target);
    if (!idx)
        throw TargetNotReachable("state " + format_label(target) + " is not reachable");
    return {graph, *idx};
}

StateClassAutomaton class_automaton(const ReachableStateGraph& graph, const StateVector& target)
{
    return class_automaton(graph, Label{target});
}

std::size_t count_nodes(const ComputingTreeNode& root)
{
    std::size_t nodes = 0;
    std::size_t leaves = 0;
    collect(root, nodes, leaves);
    return nodes;
}

std::size_t count_leaves(const ComputingTreeNode& root)
{
    std::size_t nodes = 0;
    std::size_t leaves = 0;
    collect(root, nodes, leaves);
    return leaves;
}

std::vector<Label> distinct_labels(const ComputingTreeNode& root)
{
    std::vector<Label> out;
    std::set<Label, LabelLess> seen;
    std::vector<const ComputingTreeNode*> stack{&root};
    while (!stack.empty()) {
        const auto* node = stack.back();
        stack.pop_back();
        if (seen.insert(node->label).second)
            out.push_back(node->label);
        for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
            stack.push_back(&*it);
    }
    return out;
}

std::string tree_to_dot(const ComputingTreeNode& root)
{
    std::ostringstream out;
    out << "digraph computing_tree {\n  node [shape=box];\n";
    std::size_t counter = 0;
    tree_dot(root, counter, out);
    out << "}\n";
    return out.str();
}

std::string graph_to_dot(const ReachableStateGraph& graph)
{
    std::ostringstream out;
    out << "digraph reachable {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << dot_escape(format_label(graph.nodes[i])) << "\""
            << (i == 0 ? ", style=bold" : "") << "];\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i)
        for (std::size_t e = 0; e < graph.events.size(); ++e)
            out << "  n" << i << " -> n" << graph.edges[i][e] << " [label=\"" << dot_escape(graph.events[e])
                << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace fdes
