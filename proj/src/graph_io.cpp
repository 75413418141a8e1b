#include <hypex/graph_io.hpp>

#include <fstream>
#include <sstream>

namespace hypex
{
    namespace
    {
        auto next_data_line(std::istream & in, std::string & line, int & line_no) -> bool
        {
            while (std::getline(in, line)) {
                ++line_no;
                auto first = line.find_first_not_of(" \t\r");
                if (first == std::string::npos || line[first] == '#')
                    continue;
                return true;
            }
            return false;
        }

        [[noreturn]] auto fail(int line_no, const std::string & what) -> void
        {
            throw ParseError(".3g line " + std::to_string(line_no) + ": " + what);
        }
    }

    auto read_3g(std::istream & in) -> ThreeGraph
    {
        std::string line;
        int line_no = 0;
        if (! next_data_line(in, line, line_no))
            fail(line_no, "missing header `n m`");

        long n = -1, m = -1;
        {
            std::istringstream hs(line);
            std::string extra;
            if (! (hs >> n >> m) || (hs >> extra))
                fail(line_no, "header must be `n m`");
        }
        if (n < 1 || n > max_vertices)
            fail(line_no, "vertex count " + std::to_string(n) + " outside [1," + std::to_string(max_vertices) + "]");
        if (m < 0 || m > triple_count(static_cast<int>(n)))
            fail(line_no, "edge count " + std::to_string(m) + " impossible for n=" + std::to_string(n));

        ThreeGraph g(static_cast<int>(n));
        for (long i = 0; i < m; ++i) {
            if (! next_data_line(in, line, line_no))
                fail(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
            std::istringstream es(line);
            long a, b, c;
            std::string extra;
            if (! (es >> a >> b >> c) || (es >> extra))
                fail(line_no, "edge must be `a b c`");
            if (! (0 <= a && a < b && b < c && c < n))
                fail(line_no, "edge must satisfy 0 <= a < b < c < n");
            if (! g.add_edge(Triple{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}))
                fail(line_no, "duplicate edge");
        }
        if (next_data_line(in, line, line_no))
            fail(line_no, "trailing data after " + std::to_string(m) + " edges");
        return g;
    }

    auto read_3g(const std::filesystem::path & path) -> ThreeGraph
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open " + path.string());
        return read_3g(in);
    }

    auto parse_3g(const std::string & text) -> ThreeGraph
    {
        std::istringstream in(text);
        return read_3g(in);
    }

    auto write_3g(std::ostream & out, const ThreeGraph & g) -> void
    {
        out << g.n() << ' ' << g.size() << '\n';
        g.for_each_rank([&] (int r) {
            auto & t = unrank_fast(r);
            out << t.a << ' ' << t.b << ' ' << t.c << '\n';
        });
    }

    auto write_3g(const std::filesystem::path & path, const ThreeGraph & g) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw ParseError("cannot write " + path.string());
        write_3g(out, g);
    }

    auto format_3g(const ThreeGraph & g) -> std::string
    {
        std::ostringstream out;
        write_3g(out, g);
        return out.str();
    }
}
