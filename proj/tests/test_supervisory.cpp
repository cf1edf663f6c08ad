#include <doctest.h>

#include <map>

#include "fdes/errors.hpp"
#include "fdes/supervisory.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace fdes;
using fixtures::D;
using fixtures::S;

namespace {

void report(const props::Outcome& o)
{
    for (const auto& f : o.failures)
        FAIL_CHECK(f);
    CHECK(o.ok());
}

std::set<std::string> enabled(const Supervisor& sup, const EventString& s)
{
    std::set<std::string> out;
    for (const auto& [e, d] : sup.enablement(s)) {
        CHECK((d.is_zero() || d.is_one()));
        if (d.is_one())
            out.insert(e);
    }
    return out;
}

} // namespace

TEST_CASE("controllability rows")
{
    const auto row = make_row(S("a1"), "a1", D("0.8"), D("0.4"), D("0.7"), D("0.2"));
    CHECK(row.lhs == D("0.4"));
    CHECK_FALSE(row.verdict);
    CHECK(make_row({}, "a1", D("0.8"), D("0.8"), D("0.7"), D("0.8")).verdict);
    CHECK(n_controllability_row_count(2, 0) == 2);
    CHECK(n_controllability_row_count(2, 1) == 6);
    CHECK(n_controllability_row_count(3, 2) == 39);
}

TEST_CASE("Examples 2 and 3 with attributes 0.7 and 0.2")
{
    const auto r = check_controllability(fixtures::example2(), fixtures::example3(), fixtures::example4_attrs());
    CHECK_FALSE(r.overall);
    const auto* f = r.first_failure();
    REQUIRE(f);
    CHECK(f->representative == S("a1"));
    CHECK(f->event == "a1");
    CHECK(f->prK_s == D("0.8"));
    CHECK(f->LG_s_sigma == D("0.4"));
    CHECK(f->sigma_uc == D("0.7"));
    CHECK(f->lhs == D("0.4"));
    CHECK(f->prK_s_sigma == D("0.2"));
    REQUIRE(r.rows.size() >= 4);
    CHECK(r.rows[0].verdict);
    CHECK(r.rows[1].verdict);
    CHECK(r.rows[0].prK_s == D("0.8"));
    CHECK(r.rows[0].LG_s_sigma == D("0.8"));
    CHECK(r.rows[1].LG_s_sigma == D("0.4"));
    CHECK(r.rows[1].lhs == D("0.2"));

    CheckOptions first;
    first.first_failure = true;
    const auto t = check_controllability(fixtures::example2(), fixtures::example3(), fixtures::example4_attrs(), first);
    CHECK(t.rows.size() == 4);
    CHECK(t.rows[3].event == "a2");
    CHECK(t.rows[3].verdict);
}

TEST_CASE("Example 5 verdicts")
{
    const auto g = fixtures::example5(false);
    const auto h = fixtures::example5(true);
    const auto mixed = check_controllability(g, h, fixtures::example5_attrs({"0.8", "0.75", "0.7", "0.2", "0.25", "0.3"}));
    CHECK_FALSE(mixed.overall);
    std::set<std::string> failing_at_epsilon;
    for (const auto& row : mixed.rows)
        if (!row.verdict && row.representative.empty())
            failing_at_epsilon.insert(row.event);
    CHECK(failing_at_epsilon == std::set<std::string>{"b2", "b3"});
    REQUIRE(mixed.first_failure());
    CHECK(mixed.first_failure()->representative.empty());
    const auto low = check_controllability(g, h, EventAttributes::uniform(g.alphabet(), D("0.2")));
    CHECK(low.overall);
}

TEST_CASE("check rejects max-product and mismatched alphabets")
{
    const auto ex2 = fixtures::example2();
    const FuzzyAutomaton prod({}, ex2.events(), ex2.initial(), {}, Semantics::MaxProduct);
    CHECK_THROWS_AS(check_controllability(prod, prod, fixtures::example4_attrs()), SemanticsMismatch);
    const FuzzyAutomaton other({}, {{"x", Matrix::identity(2)}}, ex2.initial(), {}, Semantics::MaxMin);
    CHECK_THROWS_AS(check_controllability(ex2, other, fixtures::example4_attrs()), AlphabetMismatch);
}

TEST_CASE("n-bounded controllability")
{
    const auto g = fixtures::example2();
    const auto h = fixtures::example3();
    const auto zero = check_n_controllability(g, h, fixtures::example4_attrs(), 0);
    CHECK(zero.overall);
    CHECK(zero.rows.size() == 2);
    CHECK(zero.bound == std::optional<std::size_t>(0));
    const auto one = check_n_controllability(g, h, fixtures::example4_attrs(), 1);
    CHECK_FALSE(one.overall);
    CHECK(one.rows.size() == n_controllability_row_count(2, 1));
    REQUIRE(one.first_failure());
    CHECK(one.first_failure()->representative == S("a1"));
    CHECK(one.first_failure()->event == "a1");

    const auto g5 = fixtures::example5(false);
    const auto low = EventAttributes::uniform(g5.alphabet(), D("0.2"));
    for (std::size_t n = 0; n <= 2; ++n)
        CHECK(check_n_controllability(g5, fixtures::example5(true), low, n).overall);

    std::size_t last = 0;
    CheckOptions opts;
    opts.progress = [&](std::size_t rows) { last = rows; };
    check_n_controllability(g5, fixtures::example5(true), low, 2, opts);
    CHECK(last > 0);
}

TEST_CASE("language form of the check")
{
    const auto g = fixtures::example6();
    const auto k = fixtures::example7_k();
    CHECK(check_controllability(g, k, fixtures::example6_attrs("0")).overall);
    const auto r = check_controllability(g, k, fixtures::example6_attrs("0.3"));
    CHECK_FALSE(r.overall);
    REQUIRE(r.first_failure());
    CHECK(r.first_failure()->representative == S("a b"));
    CHECK(r.first_failure()->event == "c");
    CHECK_FALSE(r.spec_is_automaton);
}

TEST_CASE("sufficient condition")
{
    const auto g = fixtures::example6();
    const auto k = fixtures::example7_k();
    const auto attrs = fixtures::example6_attrs("0");
    const auto suff = check_sufficient_condition(g, k, attrs);
    if (suff.holds)
        CHECK(check_n_controllability(g, k, attrs, 3).overall);

    FuzzyLanguage ones({"a", "b", "c"});
    for (const auto& s : strings_up_to({"a", "b", "c"}, 4))
        ones.set(s, Degree::one());
    CHECK(check_sufficient_condition(g, ones, attrs).holds);

    FuzzyLanguage eps({"a", "b", "c"});
    eps.set({}, Degree::one());
    const auto v = check_sufficient_condition(g, eps, fixtures::example6_attrs("0"));
    CHECK_FALSE(v.holds);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->s.empty());
    CHECK(v.counterexample->event == "a");
}

TEST_CASE("property: sufficient condition implies the bounded check")
{
    oracle::Random r(67);
    for (int i = 0; i < 100; ++i) {
        const auto g = gen::automaton(r, 3, 2, Semantics::MaxMin, false);
        const auto lg = generated_language(g, 3);
        const auto k = props::below(r, lg, 0.7);
        const auto attrs = gen::attributes(r, g.alphabet());
        if (check_sufficient_condition(g, k, attrs).holds)
            CHECK(check_n_controllability(g, k, attrs, 4).overall);
    }
}

TEST_CASE("Example 7 synthesis")
{
    const auto g = fixtures::example6();
    const auto sup = Supervisor::synthesize(g, fixtures::example7_k(), fixtures::example6_attrs("0"));
    CHECK_FALSE(sup.warning());
    for (const auto& s : strings_up_to({"a", "b", "c"}, 3))
        for (const auto& e : sup.alphabet()) {
            const bool listed = (s.empty() && e == "a") || (s == S("a") && e == "b");
            CHECK(sup.enablement(s, e) == (listed ? D("0.8") : Degree()));
        }
    CHECK(controlled_generated_degree(sup, g, S("a")) == D("0.8"));
    CHECK(controlled_generated_degree(sup, g, S("a b")) == D("0.8"));
    CHECK(controlled_generated_degree(sup, g, S("a b c")).is_zero());
    CHECK(controlled_marked_degree(sup, g, S("a b")) == D("0.8"));
    CHECK(controlled_marked_degree(sup, g, {}) == Degree::one());
}

TEST_CASE("full uncontrollability enables what is physically possible")
{
    oracle::Random r(71);
    for (int i = 0; i < 30; ++i) {
        const auto [g, h] = props::plant_and_spec(r);
        const auto sup = Supervisor::synthesize(g, h, EventAttributes::uniform(g.alphabet(), Degree::one()));
        for (const auto& s : strings_up_to(g.alphabet(), 3))
            for (const auto& e : g.alphabet()) {
                auto se = s;
                se.push_back(e);
                CHECK(sup.enablement(s, e) == g.generated_degree(se));
            }
    }
}

TEST_CASE("Example 5 crisp supervisor")
{
    const auto h = fixtures::example5_crisp(true);
    using Set = std::vector<std::string>;
    CHECK(crisp_active_events(h, {}) == Set{"a1", "a3"});
    CHECK(crisp_active_events(h, S("a1")) == Set{"a2"});
    CHECK(crisp_active_events(h, S("a1 a2")).empty());
    CHECK(crisp_active_events(h, S("a3")).empty());
    CHECK_THROWS_AS(crisp_active_events(h, S("a2")), StringNotInLanguage);
    CHECK_THROWS_AS(crisp_active_events(fixtures::example3(), {}), NotCrisp);

    const auto g = fixtures::example5_crisp(false);
    const auto attrs = fixtures::example5_attrs({"1", "1", "1", "0", "0", "0"});
    CHECK(check_controllability(g, h, attrs).overall);
    const auto sup = Supervisor::synthesize(g, h, attrs);
    CHECK(enabled(sup, {}) == std::set<std::string>{"a1", "a3"});
    CHECK(enabled(sup, S("a1")) == std::set<std::string>{"a2"});
    CHECK(enabled(sup, S("a1 a2")).empty());
    CHECK(enabled(sup, S("a3")).empty());
}

TEST_CASE("property: crisp check agrees with the set-theoretic oracle")
{
    oracle::Random r(73);
    props::Outcome o;
    int failing = 0;
    for (int i = 0; i < 200; ++i) {
        const bool expected = props::crisp_instance(r, o);
        failing += expected ? 0 : 1;
    }
    report(o);
    CHECK(failing > 10);
}

TEST_CASE("explicit supervisors and admissibility")
{
    const auto g = fixtures::example6();
    std::map<EventString, Supervisor::Enablement> table{
        {{}, {{"a", Degree::one()}}}, {S("a"), {{"b", D("0.8")}}}, {S("a b"), {{"c", Degree()}}}};
    const auto sup = Supervisor::explicit_table({"a", "b", "c"}, table);
    CHECK(sup.enablement(S("a"), "b") == D("0.8"));
    CHECK(sup.enablement(S("b"), "a").is_zero());
    const auto ok = check_admissibility(sup, g, fixtures::example6_attrs("0"), 4);
    CHECK(ok.admissible);
    CHECK(ok.bound == std::optional<std::size_t>(4));
    const auto bad = check_admissibility(sup, g, fixtures::example6_attrs("0.3"), 4);
    CHECK_FALSE(bad.admissible);
    REQUIRE(bad.counterexample);
    CHECK(bad.counterexample->s == S("a b"));
    CHECK(bad.counterexample->event == "c");
    CHECK(bad.counterexample->required == D("0.3"));

    CHECK(controlled_generated_degree(sup, g, S("a")) == D("0.8"));
    CHECK(controlled_generated_degree(sup, g, S("a b")) == D("0.8"));
    CHECK(controlled_marked_degree(sup, g, S("a b")) == D("0.8"));

    const auto none = Supervisor::explicit_table({"a", "b", "c"}, {});
    for (const auto& s : strings_up_to({"a", "b", "c"}, 3))
        CHECK(controlled_generated_degree(none, g, s) == (s.empty() ? Degree::one() : Degree()));
    const FuzzyAutomaton unmarked({}, g.events(), g.initial(), {}, Semantics::MaxMin);
    CHECK(controlled_marked_degree(sup, unmarked, S("a b")).is_zero());
    CHECK_THROWS_AS(controlled_generated_degree(sup, g, S("z")), UnknownEvent);
}

TEST_CASE("nonblocking: Example 6 and 7")
{
    const auto g = fixtures::example6();
    const auto k = fixtures::example7_k();
    {
        const auto attrs = fixtures::example6_attrs("0");
        const auto sup = Supervisor::synthesize(g, k, attrs);
        const auto r = check_nonblocking(sup, g, k, attrs, 6);
        // pr(K)(a) = 0.8 while L_G,m(a) = 0, so the containment precondition fails at a.
        CHECK(r.initial_one.holds);
        CHECK_FALSE(r.prefix_in_marked.holds);
        CHECK(r.prefix_in_marked.witness == std::optional<EventString>(S("a")));
        CHECK(r.condition_a.holds);
        CHECK(r.condition_b.overall);
        CHECK(r.direct == BlockingVerdict::Nonblocking);
        CHECK(r.exhaustive);
    }
    {
        const auto attrs = fixtures::example6_attrs("0.3");
        std::map<EventString, Supervisor::Enablement> table{
            {{}, {{"a", Degree::one()}}}, {S("a"), {{"b", D("0.8")}}}, {S("a b"), {{"c", D("0.3")}}}};
        const auto sup = Supervisor::explicit_table({"a", "b", "c"}, table);
        const auto r = check_nonblocking(sup, g, k, attrs, 6);
        CHECK(r.direct == BlockingVerdict::Blocking);
        REQUIRE(r.blocking_witness);
        CHECK(*r.blocking_witness == S("a b c"));
        CHECK(r.witness_generated == D("0.3"));
        CHECK(r.witness_prefix_marked.is_zero());
        CHECK_FALSE(r.condition_b.overall);
    }
}

TEST_CASE("nonblocking preconditions are reported separately")
{
    const auto g = fixtures::example6();
    FuzzyLanguage k({"a", "b", "c"});
    k.set({}, D("0.5"));
    k.set(S("a b c"), D("0.8"));
    const auto attrs = fixtures::example6_attrs("0");
    const auto sup = Supervisor::synthesize(g, k, attrs);
    const auto r = check_nonblocking(sup, g, k, attrs, 5);
    CHECK_FALSE(r.initial_one.holds);
    CHECK_FALSE(r.prefix_in_marked.holds);
    REQUIRE(r.prefix_in_marked.witness);
}

TEST_CASE("property: controllability round trip")
{
    oracle::Random r(79);
    props::Outcome o;
    std::size_t passing = 0;
    for (int i = 0; i < 60; ++i)
        props::theorem1_instance(r, o, 5, &passing);
    MESSAGE(passing << " of 60 instances controllable");
    CHECK(passing > 5);
    CHECK(passing < 55);
    report(o);
}

TEST_CASE("property: synthesized supervisors are admissible and factor through pair states")
{
    oracle::Random r(83);
    for (int i = 0; i < 60; ++i) {
        const auto [g, h] = props::plant_and_spec(r);
        const auto attrs = gen::attributes(r, g.alphabet());
        const auto sup = Supervisor::synthesize(g, h, attrs);
        const auto a = check_admissibility(sup, g, attrs, 3);
        CHECK(a.admissible);
        CHECK_FALSE(a.bound.has_value());
        CHECK(check_admissibility(Supervisor::synthesize(g, generated_language(h, 4), attrs), g, attrs, 3).admissible);

        // Two strings reaching the same pair state give identical rows and enablement.
        const auto report = check_controllability(g, h, attrs);
        const auto* graph = sup.pair_graph();
        REQUIRE(graph);
        std::map<std::size_t, EventString> second;
        for (const auto& s : strings_up_to(g.alphabet(), 4)) {
            const auto node = graph->find({g.run(s), h.run(s)});
            REQUIRE(node);
            if (s != graph->witness[*node] && !second.count(*node))
                second[*node] = s;
        }
        for (const auto& [node, s] : second) {
            CHECK(sup.enablement(s) == sup.enablement(graph->witness[node]));
            for (const auto& row : report.rows) {
                if (row.representative != graph->witness[node])
                    continue;
                auto se = s;
                se.push_back(row.event);
                const auto again = make_row(s, row.event, h.generated_degree(s), g.generated_degree(se),
                                            attrs.uncontrollability(row.event), h.generated_degree(se));
                CHECK(again.lhs == row.lhs);
                CHECK(again.prK_s_sigma == row.prK_s_sigma);
                CHECK(again.verdict == row.verdict);
            }
        }
    }
}

TEST_CASE("property: pair-graph check agrees with the bounded check")
{
    oracle::Random r(89);
    for (int i = 0; i < 80; ++i) {
        const auto [g, h] = props::plant_and_spec(r);
        const auto attrs = gen::attributes(r, g.alphabet());
        const bool exact = check_controllability(g, h, attrs).overall;
        const bool bounded = check_n_controllability(g, h, attrs, 4).overall;
        // The bounded check looks at a subset of strings; the pair graph covers all of them.
        if (exact)
            CHECK(bounded);
        const std::size_t depth = enumerate_pairs(g, h).nodes.size();
        if (depth <= 6)
            CHECK(check_n_controllability(g, h, attrs, depth).overall == exact);
    }
}
