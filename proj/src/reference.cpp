#include <hypex/reference.hpp>

#include <hypex/errors.hpp>
#include <hypex/triple.hpp>

#include <algorithm>
#include <cctype>

namespace hypex
{
    namespace
    {
        // Published values, keyed by (theorem, order, n range). Version-bump
        // reference_data_version whenever a row changes.
        const std::vector<ReferenceRow> rows = {
            // loose path P, orders 1..5
            {"ex1", {"P"}, {}, false, 1, 1, 6, "C(n,3)", {"K[n]"}},
            {"ex1", {"P"}, {}, false, 1, 7, 7, "20", {"K6 u K1"}},
            {"ex1", {"P"}, {}, false, 1, 8, -1, "C(n-1,2)", {"S[n]"}},

            {"ex2", {"P"}, {}, false, 2, 7, 7, "15", {"S7"}},
            {"ex2", {"P"}, {}, false, 2, 8, 12, "20+C(n-6,3)", {"K6 u K[n-6]"}},
            {"ex2", {"P"}, {}, false, 2, 13, 13, "40", {"2K6 u K1", "Co13"}},
            {"ex2", {"P"}, {}, false, 2, 14, -1, "4+C(n-4,2)", {"Co[n]"}},

            {"ex3", {"P"}, {}, false, 3, 7, 10, "3*n-8", {"G1([n])", "G2([n])"}},
            {"ex3", {"P"}, {}, false, 3, 11, 11, "25", {"G1(11)", "G2(11)", "Co11"}},
            {"ex3", {"P"}, {}, false, 3, 12, 12, "32", {"Co12"}},
            {"ex3", {"P"}, {}, false, 3, 13, 14, "20+C(n-7,2)", {"K6 u S[n-6]"}},
            {"ex3", {"P"}, {}, false, 3, 15, -1, "4+C(n-5,2)", {"K4 u S[n-4]"}},

            {"ex4", {"P"}, {}, false, 4, 7, 7, "12", {"G3(7)", "K5+2"}},
            {"ex4", {"P"}, {}, false, 4, 8, 9, "2*n-2", {"G3([n])"}},
            {"ex4", {"P"}, {}, false, 4, 10, 10, "20", {"K5 u K5"}},
            {"ex4", {"P"}, {}, false, 4, 11, 11, "20", {"G3(11)"}},
            {"ex4", {"P"}, {}, false, 4, 12, 12, "28", {"G1(12)", "G2(12)"}},
            {"ex4", {"P"}, {}, false, 4, 13, 13, "33", {"K6 u G1(7)", "K6 u G2(7)"}},
            {"ex4", {"P"}, {}, false, 4, 14, 14, "40", {"2K6 u 2K1", "K4 u S10"}},
            {"ex4", {"P"}, {}, false, 4, 15, 15, "48", {"Ro15", "K6 u S9"}},
            {"ex4", {"P"}, {}, false, 4, 16, -1, "3+C(n-5,2)", {"Ro[n]"}},

            {"ex5", {"P"}, {}, false, 5, 7, 7, "11", {"Ex4(7;M)"}},
            {"ex5", {"P"}, {}, false, 5, 8, 8, "13", {"K5+3"}},
            {"ex5", {"P"}, {}, false, 5, 9, 9, "14", {"K5+4", "K5 u K4", "Ex(9;{P,C}|M)"}},
            {"ex5", {"P"}, {}, false, 5, 10, 10, "19", {"Co10"}},
            {"ex5", {"P"}, {}, false, 5, 11, 11, "19", {"K4 u S7"}},
            {"ex5", {"P"}, {}, false, 5, 12, 12, "25", {"K5 u S7", "K4 u S8"}},
            {"ex5", {"P"}, {}, false, 5, 13, 13, "32", {"K4 u S9", "K6 u K5+2", "K6 u G3(7)"}},
            {"ex5", {"P"}, {}, false, 5, 14, 14, "39", {"Ro14"}},
            {"ex5", {"P"}, {}, false, 5, 15, 15, "46", {"K5 u S10"}},
            {"ex5", {"P"}, {}, false, 5, 16, 16, "56", {"K6 u S10"}},
            {"ex5", {"P"}, {}, false, 5, 17, 17, "65", {"K5 u S12", "K6 u S11"}},
            {"ex5", {"P"}, {}, false, 5, 18, -1, "10+C(n-6,2)", {"K5 u S[n-5]"}},

            // matching M, orders 1..4
            {"ekr", {"M"}, {}, false, 1, 6, 6, "C(n-1,2)", {}},
            {"ekr", {"M"}, {}, false, 1, 7, -1, "C(n-1,2)", {"S[n]"}},
            {"hm", {"M"}, {}, false, 2, 7, -1, "3*n-8", {"G1([n])", "G2([n])"}},
            {"hk", {"M"}, {}, false, 3, 7, -1, "2*n-2", {"G3([n])"}},
            {"m4", {"M"}, {}, false, 4, 7, 7, "n+4", {"Ex4(7;M)"}},
            {"m4", {"M"}, {}, false, 4, 8, -1, "n+4", {}},

            // triangle C
            {"c3", {"C"}, {}, false, 1, 6, 7, "C(n-1,2)", {}},
            {"c3", {"C"}, {}, false, 1, 8, -1, "C(n-1,2)", {"S[n]"}},

            // conditional numbers
            {"conn-p-c", {"P"}, {"C"}, true, 1, 7, -1, "3*n-8", {"G1([n])", "G2([n])"}},
            {"conn-p-cm", {"P"}, {"C", "M"}, true, 1, 7, -1, "n+5", {"K5+[n-5]"}},
            {"pc-m", {"P", "C"}, {"M"}, false, 1, 6, 9, "2*n-4", {}},
            {"pc-m", {"P", "C"}, {"M"}, false, 1, 10, 10, "20", {}},
            {"pc-m", {"P", "C"}, {"M"}, false, 1, 11, -1, "4+C(n-4,2)", {"Co[n]"}},
            {"pcpk-m", {"P", "C", "P2+K3"}, {"M"}, false, 1, 6, -1, "2*n-4", {}},
            {"mc2", {"M", "C"}, {}, false, 2, 6, -1, "max(10,n)", {}},

            // stated without proof
            {"conn-pc-m", {"P", "C"}, {"M"}, true, 1, 10, 10, "19", {"Co10"}, false},
            {"conn-pc-m", {"P", "C"}, {"M"}, true, 2, 11, 11, "18", {}, false},
        };

        class FormulaParser
        {
            public:
                FormulaParser(const std::string & text, int n) :
                    _s(text),
                    _n(n)
                {
                }

                auto parse() -> long
                {
                    auto v = expr();
                    skip();
                    if (_pos != _s.size())
                        fail("trailing characters");
                    return v;
                }

            private:
                const std::string & _s;
                int _n;
                std::size_t _pos = 0;

                [[noreturn]] auto fail(const std::string & what) const -> void
                {
                    throw ParseError("formula '" + _s + "': " + what);
                }

                auto skip() -> void
                {
                    while (_pos < _s.size() && std::isspace(static_cast<unsigned char>(_s[_pos])))
                        ++_pos;
                }

                auto eat(char c) -> bool
                {
                    skip();
                    if (_pos < _s.size() && _s[_pos] == c) {
                        ++_pos;
                        return true;
                    }
                    return false;
                }

                auto expect(char c) -> void
                {
                    if (! eat(c))
                        fail(std::string("expected '") + c + "'");
                }

                auto expr() -> long
                {
                    auto v = term();
                    while (true) {
                        if (eat('+'))
                            v += term();
                        else if (eat('-'))
                            v -= term();
                        else
                            return v;
                    }
                }

                auto term() -> long
                {
                    auto v = atom();
                    while (eat('*'))
                        v *= atom();
                    return v;
                }

                auto atom() -> long
                {
                    skip();
                    if (_pos >= _s.size())
                        fail("unexpected end");
                    char c = _s[_pos];
                    if (std::isdigit(static_cast<unsigned char>(c))) {
                        long v = 0;
                        while (_pos < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_pos])))
                            v = v * 10 + (_s[_pos++] - '0');
                        return v;
                    }
                    if (eat('(')) {
                        auto v = expr();
                        expect(')');
                        return v;
                    }
                    if (_s.compare(_pos, 4, "max(") == 0) {
                        _pos += 4;
                        auto a = expr();
                        expect(',');
                        auto b = expr();
                        expect(')');
                        return std::max(a, b);
                    }
                    if (_s.compare(_pos, 2, "C(") == 0) {
                        _pos += 2;
                        auto a = expr();
                        expect(',');
                        auto b = expr();
                        expect(')');
                        return static_cast<long>(binom(static_cast<int>(a), static_cast<int>(b)));
                    }
                    if (c == 'n') {
                        ++_pos;
                        return _n;
                    }
                    fail(std::string("unexpected '") + c + "'");
                }
        };
    }

    auto reference_rows() -> const std::vector<ReferenceRow> &
    {
        return rows;
    }

    auto evaluate_formula(const std::string & formula, int n) -> long
    {
        return FormulaParser(formula, n).parse();
    }

    auto instantiate_family_member(const std::string & member, int n) -> std::string
    {
        std::string out;
        std::size_t i = 0;
        while (i < member.size()) {
            if (member[i] == '[') {
                auto close = member.find(']', i);
                if (close == std::string::npos)
                    throw ParseError("unterminated [ in '" + member + "'");
                out += std::to_string(evaluate_formula(member.substr(i + 1, close - i - 1), n));
                i = close + 1;
            }
            else
                out += member[i++];
        }
        return out;
    }

    auto reference_lookup(const std::string & theorem, int order, int n) -> std::optional<ReferenceValue>
    {
        for (auto & r : rows) {
            if (r.theorem != theorem || r.order != order || n < r.n_lo || (r.n_hi != -1 && n > r.n_hi))
                continue;
            ReferenceValue v{evaluate_formula(r.value, n), {}, &r};
            for (auto & m : r.family)
                v.family.push_back(instantiate_family_member(m, n));
            return v;
        }
        return std::nullopt;
    }

    auto reference_ex_p(int order, int n) -> std::optional<long>
    {
        if (order < 1 || order > 5)
            return std::nullopt;
        auto v = reference_lookup("ex" + std::to_string(order), order, n);
        if (! v)
            return std::nullopt;
        return v->value;
    }

    auto closed_form_ex_p(int order, int n) -> std::optional<long>
    {
        auto C = [] (int a, int b) { return static_cast<long>(binom(a, b)); };
        switch (order) {
            case 1:
                if (n <= 0)
                    return std::nullopt;
                if (n <= 6)
                    return C(n, 3);
                if (n == 7)
                    return 20;
                return C(n - 1, 2);
            case 2:
                if (n < 7)
                    return std::nullopt;
                if (n == 7)
                    return 15;
                if (n <= 12)
                    return 20 + C(n - 6, 3);
                if (n == 13)
                    return 40;
                return 4 + C(n - 4, 2);
            case 3:
                if (n < 7)
                    return std::nullopt;
                if (n <= 10)
                    return 3 * n - 8;
                if (n == 11)
                    return 25;
                if (n == 12)
                    return 32;
                if (n <= 14)
                    return 20 + C(n - 7, 2);
                return 4 + C(n - 5, 2);
            case 4: {
                if (n < 7)
                    return std::nullopt;
                switch (n) {
                    case 7: return 12;
                    case 8: case 9: return 2 * n - 2;
                    case 10: case 11: return 20;
                    case 12: return 28;
                    case 13: return 33;
                    case 14: return 40;
                    case 15: return 48;
                    default: return 3 + C(n - 5, 2);
                }
            }
            case 5: {
                if (n < 7)
                    return std::nullopt;
                switch (n) {
                    case 7: return 11;
                    case 8: return 13;
                    case 9: return 14;
                    case 10: case 11: return 19;
                    case 12: return 25;
                    case 13: return 32;
                    case 14: return 39;
                    case 15: return 46;
                    case 16: return 56;
                    case 17: return 65;
                    default: return 10 + C(n - 6, 2);
                }
            }
            default:
                return std::nullopt;
        }
    }

    auto closed_form_ex_m(int order, int n) -> std::optional<long>
    {
        if (n < 7 && ! (order == 1 && n == 6))
            return std::nullopt;
        switch (order) {
            case 1: return static_cast<long>(binom(n - 1, 2));
            case 2: return 3L * n - 8;
            case 3: return 2L * n - 2;
            case 4: return static_cast<long>(n) + 4;
            default: return std::nullopt;
        }
    }
}
