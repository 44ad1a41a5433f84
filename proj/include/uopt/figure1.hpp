#pragma once

// The seven-point dominance example: four front points p1..p4 and three
// dominated points q1..q3.

#include <array>
#include <string_view>

#include "uopt/pareto.hpp"

namespace uopt::figure1 {

using Point = Vec<2, double>;

struct Named {
    std::string_view name;
    Point point;
};

inline constexpr std::array<Named, 7> kPoints{{
    {"p1", {{-1.0, 2.5}}},
    {"p2", {{1.0, 0.75}}},
    {"p3", {{1.5, -0.5}}},
    {"p4", {{3.5, -1.0}}},
    {"q1", {{1.0, 1.5}}},
    {"q2", {{2.0, 0.5}}},
    {"q3", {{2.5, 2.0}}},
}};

inline Point point(std::string_view name) {
    for (const auto& n : kPoints)
        if (n.name == name) return n.point;
    return {};
}

inline FinSet<Point> all_points() {
    FinSet<Point> s;
    for (const auto& n : kPoints) s.push_back(n.point);
    return s;
}

inline FinSet<Point> expected_front() {
    return {point("p1"), point("p2"), point("p3"), point("p4")};
}

enum class Claim { Dominates, Indifferent };

struct Statement {
    std::string_view lhs;
    Claim claim;
    std::string_view rhs;
};

/// Every relationship stated for the example, in reading order.
inline constexpr std::array<Statement, 9> kStatements{{
    {"p2", Claim::Dominates, "q1"},
    {"p2", Claim::Dominates, "q3"},
    {"p3", Claim::Dominates, "q2"},
    {"p3", Claim::Dominates, "q3"},
    {"q1", Claim::Indifferent, "p1"},
    {"p1", Claim::Indifferent, "q3"},
    {"q1", Claim::Dominates, "q3"},
    {"q2", Claim::Dominates, "q3"},
    {"q1", Claim::Indifferent, "q2"},
}};

inline bool holds(const Statement& s) {
    const Point a = point(s.lhs);
    const Point b = point(s.rhs);
    return s.claim == Claim::Dominates ? dominates(a, b) : indifferent(Dominance{}, a, b);
}

}  // namespace uopt::figure1
