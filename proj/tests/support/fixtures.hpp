#pragma once

#include <string>
#include <vector>

#include "fdes/algebra.hpp"
#include "fdes/attributes.hpp"
#include "fdes/automaton.hpp"
#include "fdes/language.hpp"

#ifndef FDES_TEST_DATA_DIR
#define FDES_TEST_DATA_DIR "tests/data"
#endif
#ifndef FDES_TEST_GOLDEN_DIR
#define FDES_TEST_GOLDEN_DIR "tests/golden"
#endif

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(FDES_TEST_DATA_DIR) + "/" + name; }
inline std::string golden(const std::string& name) { return std::string(FDES_TEST_GOLDEN_DIR) + "/" + name; }

inline fdes::Degree D(const char* text) { return fdes::Degree::parse(text); }

inline fdes::StateVector V(std::initializer_list<const char*> xs)
{
    fdes::StateVector v;
    for (const char* x : xs)
        v.push_back(D(x));
    return v;
}

inline fdes::Matrix M(std::initializer_list<std::initializer_list<const char*>> rows)
{
    std::vector<std::vector<fdes::Degree>> out;
    for (const auto& r : rows) {
        std::vector<fdes::Degree> row;
        for (const char* x : r)
            row.push_back(D(x));
        out.push_back(std::move(row));
    }
    return fdes::Matrix::from_rows(out);
}

inline fdes::EventString S(const std::string& text) { return fdes::split_string(text); }

inline fdes::FuzzyAutomaton example2()
{
    return {{"q1", "q2"},
            {{"a1", M({{"0.4", "0.8"}, {"0.2", "0.2"}})}, {"a2", M({{"0.4", "0.2"}, {"0.8", "0.5"}})}},
            V({"0.9", "0.1"}),
            {},
            fdes::Semantics::MaxMin};
}

inline fdes::FuzzyAutomaton example3()
{
    return {{"p1", "p2"},
            {{"a1", M({{"0.2", "0.8"}, {"0.2", "0.2"}})}, {"a2", M({{"0.2", "0.2"}, {"0.8", "0.5"}})}},
            V({"0.8", "0.2"}),
            {},
            fdes::Semantics::MaxMin};
}

inline fdes::EventAttributes example4_attrs()
{
    return fdes::EventAttributes({{"a1", D("0.7")}, {"a2", D("0.2")}});
}

inline fdes::FuzzyAutomaton example5(bool spec)
{
    const char* b = spec ? "0.2" : "0.4";
    return {{"p1", "p2", "p3"},
            {{"a1", M({{"0.4", "0.9", "0.4"}, {"0", "0.4", "0.4"}, {"0", "0", "0.4"}})},
             {"a2", M({{"0.4", "0.4", "0.4"}, {"0", "0.4", "0.9"}, {"0", "0", "0.4"}})},
             {"a3", M({{"0.4", "0.4", "0.9"}, {"0", "0.4", "0.4"}, {"0", "0", "0.4"}})},
             {"b1", M({{b, "0", "0"}, {b, b, "0"}, {b, "0.9", b}})},
             {"b2", M({{b, "0", "0"}, {"0.9", b, "0"}, {b, b, b}})},
             {"b3", M({{b, "0", "0"}, {b, b, "0"}, {"0.9", b, b}})}},
            V({"0.9", "0.1", "0"}),
            {},
            fdes::Semantics::MaxMin};
}

inline fdes::EventAttributes example5_attrs(std::initializer_list<const char*> uc)
{
    const char* names[] = {"a1", "a2", "a3", "b1", "b2", "b3"};
    std::map<std::string, fdes::Degree> m;
    std::size_t i = 0;
    for (const char* x : uc)
        m.emplace(names[i++], D(x));
    return fdes::EventAttributes(std::move(m));
}

/// Crisp plant and spec of the therapy example; the spec drops every b event.
inline fdes::FuzzyAutomaton example5_crisp(bool spec)
{
    auto unit = [](std::size_t from, std::size_t to) {
        fdes::Matrix m(3, 3);
        m(from, to) = fdes::Degree::one();
        return m;
    };
    const fdes::Matrix zero(3, 3);
    return {{"p1", "p2", "p3"},
            {{"a1", unit(0, 1)},
             {"a2", unit(1, 2)},
             {"a3", unit(0, 2)},
             {"b1", spec ? zero : unit(2, 1)},
             {"b2", spec ? zero : unit(1, 0)},
             {"b3", spec ? zero : unit(2, 0)}},
            V({"1", "0", "0"}),
            {V({"0", "1", "1"})},
            fdes::Semantics::MaxMin};
}

/// Realizes L_G: ε 1, a/ab/abc 0.8; L_G,m: ε 1, ab 0.8.
inline fdes::FuzzyAutomaton example6()
{
    fdes::Matrix a(4, 4), b(4, 4), c(4, 4);
    a(0, 1) = D("0.8");
    b(1, 2) = fdes::Degree::one();
    c(2, 3) = fdes::Degree::one();
    return {{"q0", "q1", "q2", "q3"},
            {{"a", a}, {"b", b}, {"c", c}},
            V({"1", "0", "0", "0"}),
            {V({"1", "0", "1", "0"})},
            fdes::Semantics::MaxMin};
}

inline fdes::FuzzyLanguage example7_k()
{
    fdes::FuzzyLanguage k({"a", "b", "c"});
    k.set({}, fdes::Degree::one());
    k.set({"a", "b"}, D("0.8"));
    return k;
}

inline fdes::EventAttributes example6_attrs(const char* uc_c)
{
    return fdes::EventAttributes({{"a", D("0.8")}, {"b", D("0.8")}, {"c", D(uc_c)}});
}

} // namespace fixtures
