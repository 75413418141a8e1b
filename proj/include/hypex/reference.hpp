#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hypex
{
    /// One piece of a published piecewise Turán formula. Values and family
    /// members are stored as text templates over n: values use integers, n,
    /// + - *, C(a,b) and max(a,b); family members are construction names where
    /// [expr] is replaced by its value (e.g. "K5 u S[n-5]"). Two family tokens
    /// name engine-derived families: "Ex4(7;M)" and "Ex(9;{P,C}|M)".
    struct ReferenceRow
    {
        std::string theorem;
        std::vector<std::string> forbidden;
        std::vector<std::string> anchors;
        bool connected = false;
        int order = 1;
        int n_lo = 1;
        int n_hi = -1; // -1: unbounded
        std::string value;
        std::vector<std::string> family;
        bool verified = true; // false: stated without proof in the source
    };

    inline constexpr int reference_data_version = 1;

    auto reference_rows() -> const std::vector<ReferenceRow> &;

    /// Evaluates a value template at n.
    auto evaluate_formula(const std::string & formula, int n) -> long;

    /// Substitutes [expr] occurrences in a family template.
    auto instantiate_family_member(const std::string & member, int n) -> std::string;

    struct ReferenceValue
    {
        long value;
        std::vector<std::string> family;
        const ReferenceRow * row;
    };

    /// The row covering (theorem, order, n), if any.
    auto reference_lookup(const std::string & theorem, int order, int n) -> std::optional<ReferenceValue>;

    /// Order-s Turán number of the loose path, s = 1..5, read from the table.
    auto reference_ex_p(int order, int n) -> std::optional<long>;

    // Independent closed forms, hand-coded, used to cross-check the table.
    auto closed_form_ex_p(int order, int n) -> std::optional<long>;
    auto closed_form_ex_m(int order, int n) -> std::optional<long>;
}
