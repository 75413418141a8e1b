#include <hypex/canonical.hpp>

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace hypex
{
    namespace
    {
        using Cells = std::vector<std::vector<int>>;

        class Canonicaliser
        {
            public:
                explicit Canonicaliser(const ThreeGraph & h) :
                    _h(h),
                    _links(h),
                    _n(h.n())
                {
                    compute_twins();
                }

                auto run() -> std::vector<int>
                {
                    Cells cells;
                    cells.emplace_back(_n);
                    std::iota(cells[0].begin(), cells[0].end(), 0);
                    if (_n > 0)
                        search(std::move(cells));
                    else
                        _have_best = true;
                    return _best_perm;
                }

                auto best() const -> const ThreeGraph & { return _best; }

            private:
                const ThreeGraph & _h;
                LinkTable _links;
                int _n;
                std::array<int, max_vertices> _twin_class{};

                bool _have_best = false;
                ThreeGraph _best;
                std::vector<int> _best_perm;

                // (u v) is an automorphism iff u and v have the same link outside {u,v}
                auto compute_twins() -> void
                {
                    for (int v = 0; v < _n; ++v)
                        _twin_class[v] = v;
                    for (int u = 0; u < _n; ++u) {
                        if (_twin_class[u] != u)
                            continue;
                        for (int v = u + 1; v < _n; ++v) {
                            if (_twin_class[v] != v)
                                continue;
                            bool twin = true;
                            std::uint32_t drop = (1u << u) | (1u << v);
                            for (int a = 0; a < _n && twin; ++a) {
                                if (a == u || a == v)
                                    continue;
                                if ((_links.link(u, a) & ~drop) != (_links.link(v, a) & ~drop))
                                    twin = false;
                            }
                            if (twin)
                                _twin_class[v] = u;
                        }
                    }
                }

                auto refine(Cells & cells) const -> void
                {
                    std::array<int, max_vertices> cell_of{};
                    std::vector<std::vector<int>> sig(_n);
                    while (true) {
                        int k = static_cast<int>(cells.size());
                        if (k == _n)
                            return;
                        for (int c = 0; c < k; ++c)
                            for (int v : cells[c])
                                cell_of[v] = c;

                        for (int v = 0; v < _n; ++v) {
                            auto & s = sig[v];
                            s.assign(k * k, 0);
                            for (int a = 0; a < _n; ++a) {
                                if (a == v)
                                    continue;
                                auto m = _links.link(v, a) & ~((2u << a) - 1);
                                for (; m; m &= m - 1) {
                                    int b = std::countr_zero(m);
                                    int i = cell_of[a], j = cell_of[b];
                                    if (i > j)
                                        std::swap(i, j);
                                    ++s[i * k + j];
                                }
                            }
                        }

                        Cells next;
                        next.reserve(_n);
                        for (auto & cell : cells) {
                            if (cell.size() == 1) {
                                next.push_back(cell);
                                continue;
                            }
                            auto sorted = cell;
                            std::stable_sort(sorted.begin(), sorted.end(),
                                    [&] (int x, int y) { return sig[x] < sig[y]; });
                            std::size_t i = 0;
                            while (i < sorted.size()) {
                                std::size_t j = i + 1;
                                while (j < sorted.size() && sig[sorted[j]] == sig[sorted[i]])
                                    ++j;
                                next.emplace_back(sorted.begin() + i, sorted.begin() + j);
                                i = j;
                            }
                        }
                        bool changed = next.size() != cells.size();
                        cells = std::move(next);
                        if (! changed)
                            return;
                    }
                }

                auto search(Cells cells) -> void
                {
                    refine(cells);
                    if (static_cast<int>(cells.size()) == _n) {
                        std::vector<int> perm(_n);
                        for (int i = 0; i < _n; ++i)
                            perm[cells[i][0]] = i;
                        auto image = _h.relabel(perm);
                        if (! _have_best || image.lex_less(_best)) {
                            _best = image;
                            _best_perm = std::move(perm);
                            _have_best = true;
                        }
                        return;
                    }

                    std::size_t target = 0;
                    while (cells[target].size() == 1)
                        ++target;

                    std::uint32_t seen_classes = 0;
                    for (int v : cells[target]) {
                        int cls = _twin_class[v];
                        if ((seen_classes >> cls) & 1u)
                            continue;
                        seen_classes |= 1u << cls;

                        Cells child;
                        child.reserve(cells.size() + 1);
                        for (std::size_t c = 0; c < cells.size(); ++c) {
                            if (c != target) {
                                child.push_back(cells[c]);
                                continue;
                            }
                            child.push_back({v});
                            std::vector<int> rest;
                            for (int u : cells[c])
                                if (u != v)
                                    rest.push_back(u);
                            child.push_back(std::move(rest));
                        }
                        search(std::move(child));
                    }
                }
        };

        auto check_cap(const ThreeGraph & h, int cap) -> void
        {
            if (h.n() > cap)
                throw CapabilityError("canonical form limited to n <= " + std::to_string(cap) + ", got n="
                        + std::to_string(h.n()));
        }
    }

    auto canonical_labelling(const ThreeGraph & h, int cap) -> std::vector<int>
    {
        check_cap(h, cap);
        return Canonicaliser(h).run();
    }

    auto canonical_form(const ThreeGraph & h, int cap) -> ThreeGraph
    {
        check_cap(h, cap);
        Canonicaliser c(h);
        c.run();
        if (h.n() == 0)
            return h;
        return c.best();
    }

    auto are_isomorphic(const ThreeGraph & a, const ThreeGraph & b) -> bool
    {
        if (a.n() != b.n() || a.size() != b.size())
            return false;
        auto da = a.degrees(), db = b.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;
        return canonical_form(a, max_vertices) == canonical_form(b, max_vertices);
    }

    auto canonical_hash(const ThreeGraph & canonical) -> std::string
    {
        // FNV-1a over n and the edge words; independent of std::hash
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto mix = [&] (std::uint64_t x) {
            for (int i = 0; i < 8; ++i) {
                h ^= (x >> (8 * i)) & 0xffu;
                h *= 0x100000001b3ull;
            }
        };
        mix(static_cast<std::uint64_t>(canonical.n()));
        for (auto w : canonical.words())
            mix(w);
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
}
