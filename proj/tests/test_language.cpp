#include <doctest.h>

#include "fdes/errors.hpp"
#include "fdes/language.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

using namespace fdes;
using fixtures::D;
using fixtures::S;

namespace {

FuzzyLanguage lang(std::vector<std::string> alphabet, std::initializer_list<std::pair<const char*, const char*>> xs)
{
    FuzzyLanguage l(std::move(alphabet));
    for (const auto& [s, d] : xs)
        l.set(S(s), D(d));
    return l;
}

void report(const props::Outcome& o)
{
    for (const auto& f : o.failures)
        FAIL_CHECK(f);
    CHECK(o.ok());
}

} // namespace

TEST_CASE("lookup and support")
{
    auto l = lang({"a", "b"}, {{"a b", "0.8"}});
    CHECK(l(S("a b")) == D("0.8"));
    CHECK(l(S("b")).is_zero());
    l.set(S("a b"), Degree());
    CHECK(l.empty());
    CHECK_THROWS_AS(l.set(S("z"), D("0.5")), UnknownEvent);
    CHECK(lang({"a", "b"}, {{"a b", "0.8"}}).prefix_support() == std::set<EventString>{{}, S("a"), S("a b")});
    CHECK(strings_up_to({"a", "b"}, 2) == std::vector<EventString>{{}, S("a"), S("b"), S("a a"), S("a b"),
                                                                   S("b a"), S("b b")});
}

TEST_CASE("prefix closure")
{
    const auto k = fixtures::example7_k();
    const auto pk = prefix_closure(k);
    CHECK(pk == lang({"a", "b", "c"}, {{"", "1"}, {"a", "0.8"}, {"a b", "0.8"}}));
    CHECK(prefix_closure(pk) == pk);
    CHECK(is_prefix_closed(pk));
    CHECK_FALSE(is_prefix_closed(k));
    const auto eps = lang({"a"}, {{"", "1"}});
    CHECK(prefix_closure(eps) == eps);
}

TEST_CASE("Zadeh AND and OR")
{
    const auto a = lang({"a", "b"}, {{"", "1"}, {"a", "0.5"}, {"a b", "0.3"}});
    const auto b = lang({"a", "b"}, {{"", "0.6"}, {"b", "0.5"}, {"a b", "0.8"}});
    CHECK(fuzzy_and(a, a) == a);
    CHECK(fuzzy_or(a, a) == a);
    CHECK(fuzzy_and(a, FuzzyLanguage({"a", "b"})).empty());
    CHECK(fuzzy_and(a, b) == lang({"a", "b"}, {{"", "0.6"}, {"a b", "0.3"}}));
    CHECK(fuzzy_or(a, b) == lang({"a", "b"}, {{"", "1"}, {"a", "0.5"}, {"b", "0.5"}, {"a b", "0.8"}}));
    CHECK_THROWS_AS(fuzzy_and(a, FuzzyLanguage({"a"})), AlphabetMismatch);
    // Example 7: pr(K) ∩ L_G,m restricted to the prefix support of K gives K back.
    const auto k = fixtures::example7_k();
    auto lgm = marked_language(fixtures::example6(), 3);
    CHECK(fuzzy_and(prefix_closure(k), lgm) == k);
}

TEST_CASE("controllability of languages")
{
    const auto m = lang({"a", "b"}, {{"", "1"}, {"a", "0.8"}, {"a b", "0.5"}});
    CHECK(is_controllable_wrt(m, m, EventAttributes::uniform({"a", "b"}, D("0.6"))).controllable);
    const auto zero = lang({"a", "b"}, {{"", "1"}});
    CHECK(is_controllable_wrt(zero, m, EventAttributes::uniform({"a", "b"}, Degree())).controllable);
    CHECK_THROWS_AS(is_controllable_wrt(zero, fixtures::example7_k(), EventAttributes::uniform({"a", "b", "c"}, D("1"))),
                    MNotPrefixClosed);

    // Example 4 data as languages to depth 2.
    const auto lg = generated_language(fixtures::example2(), 2);
    const auto pk = generated_language(fixtures::example3(), 2);
    const auto v = is_controllable_wrt(pk, lg, fixtures::example4_attrs());
    CHECK_FALSE(v.controllable);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->s == S("a1"));
    CHECK(v.counterexample->event == "a1");
    CHECK(v.counterexample->lhs == D("0.4"));
    CHECK(v.counterexample->rhs == D("0.2"));
}

TEST_CASE("supremal controllable sublanguage examples")
{
    const auto m = lang({"a", "b"}, {{"", "1"}, {"a", "0.8"}, {"a b", "0.5"}});
    const auto attrs = EventAttributes::uniform({"a", "b"}, D("0.6"));
    CHECK(supremal_controllable_sublanguage(m, m, attrs) == m);
    CHECK(supremal_controllable_sublanguage(FuzzyLanguage({"a", "b"}), m, attrs).empty());
    // At a, b forces pr(a b) >= min(pr(a), 0.6, 0.5), so pr(a) <= 0.3; at ε, a then forces pr(ε) <= 0.3.
    const auto k = lang({"a", "b"}, {{"", "1"}, {"a", "0.8"}, {"a b", "0.3"}});
    const auto s = supremal_controllable_sublanguage(k, m, attrs);
    CHECK(s == lang({"a", "b"}, {{"", "0.3"}, {"a", "0.3"}, {"a b", "0.3"}}));
    CHECK(is_controllable_wrt(s, m, attrs).controllable);
}

TEST_CASE("infimal prefix-closed controllable superlanguage examples")
{
    const auto m = lang({"a", "b"}, {{"", "1"}, {"a", "0.8"}, {"a b", "0.5"}});
    const auto attrs = EventAttributes::uniform({"a", "b"}, D("0.6"));
    CHECK(infimal_prefix_closed_superlanguage(m, m, attrs) == m);
    const auto k = lang({"a", "b"}, {{"", "1"}});
    CHECK(infimal_prefix_closed_superlanguage(k, m, attrs)
          == lang({"a", "b"}, {{"", "1"}, {"a", "0.6"}, {"a b", "0.5"}}));
    const auto ctrl = lang({"a", "b"}, {{"a", "0.3"}});
    REQUIRE(is_controllable_wrt(ctrl, m, attrs).controllable == false);
    const auto big = lang({"a", "b"}, {{"a b", "0.9"}});
    CHECK_THROWS_AS(infimal_prefix_closed_superlanguage(big, m, attrs), KNotContainedInM);
    CHECK_THROWS_AS(infimal_prefix_closed_superlanguage(k, fixtures::example7_k(), attrs), MNotPrefixClosed);
}

TEST_CASE("value lattice")
{
    const auto k = fixtures::example7_k();
    const auto lat = ValueLattice::of({&k}, fixtures::example6_attrs("0.3"));
    CHECK(lat.values == std::vector<Degree>{Degree(), D("0.3"), D("0.8"), D("1")});
}

TEST_CASE("generated language of an automaton contains the closure of its sublanguages")
{
    oracle::Random r(53);
    for (int i = 0; i < 100; ++i) {
        const auto g = gen::automaton(r, 3, 2);
        const auto lg = generated_language(g, 3);
        const auto k = props::below(r, lg, 0.4);
        CHECK(prefix_closure(k).subset_of(lg));
        CHECK(is_prefix_closed(lg));
    }
}

TEST_CASE("property: lattice laws")
{
    oracle::Random r(59);
    props::Outcome o;
    for (int i = 0; i < 150; ++i)
        props::lattice_instance(r, o);
    MESSAGE(o.checked << " assertions, " << o.skipped << " conditional laws skipped for unmet hypotheses");
    report(o);
}

TEST_CASE("property: closures equal the brute-force lattice oracle")
{
    oracle::Random r(61);
    props::Outcome o;
    for (int i = 0; i < 15; ++i)
        props::brute_instance(r, o);
    report(o);
}
