#include <hypex/pattern.hpp>

#include <bit>

namespace hypex
{
    namespace
    {
        auto make(std::string name, PatternKind kind, int n, std::initializer_list<Triple> edges) -> Pattern
        {
            return Pattern{std::move(name), kind, ThreeGraph(n, edges)};
        }

        auto edge_masks(const ThreeGraph & g) -> std::vector<std::uint32_t>
        {
            std::vector<std::uint32_t> m;
            m.reserve(g.size());
            g.for_each_rank([&] (int r) { m.push_back(rank_mask(r)); });
            return m;
        }

        auto single(std::uint32_t x) -> bool
        {
            return std::has_single_bit(x);
        }

        // A loose path with middle edge `mid`; when first != 0 the first edge is fixed.
        auto path_with_middle(const std::vector<std::uint32_t> & masks, std::uint32_t mid, std::uint32_t first)
            -> std::optional<std::array<std::uint32_t, 3>>
        {
            std::array<std::vector<std::uint32_t>, 32> bucket;
            for (auto x : masks) {
                if (x == mid)
                    continue;
                auto common = x & mid;
                if (single(common))
                    bucket[std::countr_zero(common)].push_back(x);
            }
            for (auto cm = mid; cm; cm &= cm - 1) {
                int c = std::countr_zero(cm);
                if (first && (first & mid) != (1u << c))
                    continue;
                for (auto dm = mid & ~(1u << c); dm; dm &= dm - 1) {
                    int d = std::countr_zero(dm);
                    if (first) {
                        for (auto y : bucket[d])
                            if (! (first & y))
                                return std::array{first, mid, y};
                    }
                    else {
                        for (auto x : bucket[c])
                            for (auto y : bucket[d])
                                if (! (x & y))
                                    return std::array{x, mid, y};
                    }
                }
            }
            return std::nullopt;
        }

        auto path_through(const std::vector<std::uint32_t> & masks, std::uint32_t e) -> bool
        {
            if (path_with_middle(masks, e, 0))
                return true;
            for (auto f : masks)
                if (f != e && single(f & e) && path_with_middle(masks, f, e))
                    return true;
            return false;
        }

        auto triangle_through(const std::vector<std::uint32_t> & masks, std::uint32_t e) -> bool
        {
            std::vector<std::uint32_t> touching;
            for (auto f : masks)
                if (f != e && single(f & e))
                    touching.push_back(f);
            for (std::size_t i = 0; i < touching.size(); ++i)
                for (std::size_t j = i + 1; j < touching.size(); ++j) {
                    auto f = touching[i], g = touching[j];
                    if (single(f & g) && std::popcount(e | f | g) == 6)
                        return true;
                }
            return false;
        }

        auto to_mask_triple(std::uint32_t m) -> Triple
        {
            int a = std::countr_zero(m);
            m &= m - 1;
            int b = std::countr_zero(m);
            m &= m - 1;
            return Triple{a, b, std::countr_zero(m)};
        }
    }

    auto loose_path() -> const Pattern &
    {
        static const Pattern p = make("P", PatternKind::LoosePath, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
        return p;
    }

    auto triangle() -> const Pattern &
    {
        static const Pattern p = make("C", PatternKind::Triangle, 6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
        return p;
    }

    auto matching() -> const Pattern &
    {
        static const Pattern p = make("M", PatternKind::Matching, 6, {{0, 1, 2}, {3, 4, 5}});
        return p;
    }

    auto two_path() -> const Pattern &
    {
        static const Pattern p = make("P2", PatternKind::TwoPath, 5, {{0, 1, 2}, {2, 3, 4}});
        return p;
    }

    auto two_path_plus_edge() -> const Pattern &
    {
        static const Pattern p = make("P2+K3", PatternKind::TwoPathPlusEdge, 8, {{0, 1, 2}, {2, 3, 4}, {5, 6, 7}});
        return p;
    }

    auto custom_pattern(std::string name, ThreeGraph g) -> Pattern
    {
        return Pattern{std::move(name), PatternKind::Custom, std::move(g)};
    }

    auto pattern_by_name(const std::string & name) -> Pattern
    {
        if (name == "P")
            return loose_path();
        if (name == "C")
            return triangle();
        if (name == "M")
            return matching();
        if (name == "P2")
            return two_path();
        if (name == "P2+K3" || name == "P2uK3" || name == "P2UK3")
            return two_path_plus_edge();
        throw InvalidParameter("unknown pattern '" + name + "' (expected P, C, M, P2, P2+K3)");
    }

    auto contains_generic(const ThreeGraph & host, const Pattern & p) -> bool
    {
        return contains_pattern(host, p.graph).has_value();
    }

    auto find_loose_path(const ThreeGraph & host) -> std::optional<std::array<Triple, 3>>
    {
        auto masks = edge_masks(host);
        for (auto mid : masks)
            if (auto r = path_with_middle(masks, mid, 0))
                return std::array{to_mask_triple((*r)[0]), to_mask_triple((*r)[1]), to_mask_triple((*r)[2])};
        return std::nullopt;
    }

    auto contains(const ThreeGraph & host, const Pattern & p) -> bool
    {
        switch (p.kind) {
            case PatternKind::LoosePath:
                return find_loose_path(host).has_value();
            case PatternKind::Triangle: {
                auto masks = edge_masks(host);
                for (auto e : masks)
                    if (triangle_through(masks, e))
                        return true;
                return false;
            }
            case PatternKind::Matching: {
                auto masks = edge_masks(host);
                for (std::size_t i = 0; i < masks.size(); ++i)
                    for (std::size_t j = i + 1; j < masks.size(); ++j)
                        if (! (masks[i] & masks[j]))
                            return true;
                return false;
            }
            case PatternKind::TwoPath: {
                auto masks = edge_masks(host);
                for (std::size_t i = 0; i < masks.size(); ++i)
                    for (std::size_t j = i + 1; j < masks.size(); ++j)
                        if (single(masks[i] & masks[j]))
                            return true;
                return false;
            }
            case PatternKind::TwoPathPlusEdge:
            case PatternKind::Custom:
                return contains_generic(host, p);
        }
        return contains_generic(host, p);
    }

    auto contains_through(const ThreeGraph & host, const Pattern & p, const Triple & e) -> bool
    {
        auto em = e.mask();
        switch (p.kind) {
            case PatternKind::LoosePath:
                return path_through(edge_masks(host), em);
            case PatternKind::Triangle:
                return triangle_through(edge_masks(host), em);
            case PatternKind::Matching: {
                bool found = false;
                host.for_each_rank([&] (int r) { found = found || ! (rank_mask(r) & em); });
                return found;
            }
            case PatternKind::TwoPath: {
                bool found = false;
                host.for_each_rank([&] (int r) { found = found || single(rank_mask(r) & em); });
                return found;
            }
            case PatternKind::TwoPathPlusEdge:
            case PatternKind::Custom:
                return contains_pattern_through(host, p.graph, e).has_value();
        }
        return false;
    }

    auto contains_in_edge_list(std::span<const Triple> edges, int n, const Pattern & p) -> bool
    {
        std::vector<std::uint32_t> masks;
        masks.reserve(edges.size());
        for (auto & e : edges)
            masks.push_back(e.mask());
        switch (p.kind) {
            case PatternKind::LoosePath:
                for (auto mid : masks)
                    if (path_with_middle(masks, mid, 0))
                        return true;
                return false;
            case PatternKind::Triangle:
                for (auto e : masks)
                    if (triangle_through(masks, e))
                        return true;
                return false;
            case PatternKind::Matching:
                for (std::size_t i = 0; i < masks.size(); ++i)
                    for (std::size_t j = i + 1; j < masks.size(); ++j)
                        if (! (masks[i] & masks[j]))
                            return true;
                return false;
            case PatternKind::TwoPath:
                for (std::size_t i = 0; i < masks.size(); ++i)
                    for (std::size_t j = i + 1; j < masks.size(); ++j)
                        if (single(masks[i] & masks[j]))
                            return true;
                return false;
            case PatternKind::TwoPathPlusEdge:
            case PatternKind::Custom:
                break;
        }
        return contains(ThreeGraph(n, edges), p);
    }

    auto is_free_of(const ThreeGraph & host, std::span<const Pattern> family) -> bool
    {
        for (auto & p : family)
            if (contains(host, p))
                return false;
        return true;
    }
}
