#include "pafp/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace pafp {

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::optional<long long> to_int(std::string_view s)
{
    long long v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        return std::nullopt;
    return v;
}

// Splits text into lines and hands each (number, content) to `fn`.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    int number = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const auto line = text.substr(0, nl);
        fn(++number, line);
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
}

std::string vertex_msg(const char* what, long long v, long long n)
{
    return std::string(what) + " " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1);
}

}  // namespace

Instance parse_instance(std::string_view text)
{
    bool header = false;
    std::optional<long long> n, source, target;
    std::vector<Edge> edges;
    std::vector<ForbiddenPair> pairs;
    int last_line = 0;

    for_each_line(text, [&](int line, std::string_view raw) {
        last_line = line;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const auto tok = tokens(raw);
        if (tok.empty())
            return;
        auto syntax = [&](const std::string& msg) { throw Error(ErrorCode::Syntax, msg, line); };
        auto semantic = [&](const std::string& msg) { throw Error(ErrorCode::Semantic, msg, line); };

        if (!header) {
            if (tok.size() != 2 || tok[0] != "pafp")
                syntax("expected header 'pafp 1'");
            if (tok[1] != "1")
                semantic("unsupported format version " + std::string(tok[1]));
            header = true;
            return;
        }
        const auto kw = tok[0];
        std::vector<long long> args;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            const auto v = to_int(tok[i]);
            if (!v)
                syntax("expected an integer, got '" + std::string(tok[i]) + "'");
            args.push_back(*v);
        }
        const std::size_t want = (kw == "edge" || kw == "pair") ? 2 : 1;
        if (kw != "nodes" && kw != "source" && kw != "target" && kw != "edge" && kw != "pair")
            syntax("unknown directive '" + std::string(kw) + "'");
        if (args.size() != want)
            syntax("'" + std::string(kw) + "' takes " + std::to_string(want) + " argument(s)");

        if (kw == "nodes") {
            if (n)
                semantic("duplicate 'nodes'");
            if (args[0] < 2)
                semantic("vertex count below 2");
            if (args[0] > (1 << 24))
                semantic("vertex count too large");
            n = args[0];
            return;
        }
        if (!n)
            semantic("'" + std::string(kw) + "' before 'nodes'");
        for (long long v : args)
            if (v < 0 || v >= *n)
                semantic(vertex_msg("vertex", v, *n));
        if (kw == "source" || kw == "target") {
            auto& slot = kw == "source" ? source : target;
            if (slot)
                semantic("duplicate '" + std::string(kw) + "'");
            slot = args[0];
        } else if (kw == "edge") {
            if (args[0] == args[1])
                semantic("self-loop: (" + std::to_string(args[0]) + "," + std::to_string(args[1]) + ")");
            if (args[0] > args[1])
                semantic("edge not forward: (" + std::to_string(args[0]) + "," +
                         std::to_string(args[1]) + ")");
            edges.push_back({static_cast<int>(args[0]), static_cast<int>(args[1])});
        } else {
            if (args[0] == args[1])
                semantic("degenerate pair: {" + std::to_string(args[0]) + "," +
                         std::to_string(args[1]) + "}");
            pairs.push_back({static_cast<int>(args[0]), static_cast<int>(args[1])});
        }
    });

    const int end = last_line + 1;
    if (!header)
        throw Error(ErrorCode::Syntax, "missing header 'pafp 1'", end);
    if (!n)
        throw Error(ErrorCode::Semantic, "missing 'nodes'", end);
    if (!source)
        throw Error(ErrorCode::Semantic, "missing 'source'", end);
    if (!target)
        throw Error(ErrorCode::Semantic, "missing 'target'", end);
    if (*source >= *target)
        throw Error(ErrorCode::Semantic, "source not before target", end);
    return make_instance(static_cast<int>(*n), std::move(edges), std::move(pairs),
                         static_cast<int>(*source), static_cast<int>(*target));
}

std::string serialize_instance(const Instance& instance)
{
    const auto canon = make_instance(instance.n, instance.edges, instance.pairs, instance.source,
                                     instance.target);
    std::ostringstream os;
    os << "pafp 1\n"
       << "nodes " << canon.n << "\n"
       << "source " << canon.source << "\n"
       << "target " << canon.target << "\n";
    for (const auto& e : canon.edges)
        os << "edge " << e.from << " " << e.to << "\n";
    for (const auto& p : canon.pairs)
        os << "pair " << p.left << " " << p.right << "\n";
    return os.str();
}

Formula3Sat parse_dimacs(std::string_view text)
{
    std::optional<long long> vars, declared;
    Formula3Sat f;
    std::vector<Literal> pending;
    int pending_line = 0;
    int last_line = 0;
    bool stopped = false;

    for_each_line(text, [&](int line, std::string_view raw) {
        last_line = line;
        if (stopped)
            return;
        const auto tok = tokens(raw);
        if (tok.empty() || tok[0].front() == 'c')
            return;
        if (tok[0] == "%") {
            stopped = true;
            return;
        }
        if (tok[0] == "p") {
            if (vars)
                throw Error(ErrorCode::Syntax, "duplicate problem line", line);
            if (tok.size() != 4 || tok[1] != "cnf")
                throw Error(ErrorCode::Syntax, "expected 'p cnf VARS CLAUSES'", line);
            const auto v = to_int(tok[2]), c = to_int(tok[3]);
            if (!v || !c || *v < 0 || *c < 0)
                throw Error(ErrorCode::Syntax, "bad problem line counts", line);
            vars = v;
            declared = c;
            f.num_vars = static_cast<int>(*v);
            return;
        }
        if (!vars)
            throw Error(ErrorCode::Syntax, "clause before problem line", line);
        for (auto t : tok) {
            const auto lit = to_int(t);
            if (!lit)
                throw Error(ErrorCode::Syntax, "expected a literal, got '" + std::string(t) + "'",
                            line);
            if (*lit == 0) {
                if (pending.size() != 3)
                    throw Error(ErrorCode::Semantic,
                                "clause has " + std::to_string(pending.size()) +
                                    " literals, expected exactly 3",
                                line);
                f.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
                continue;
            }
            const long long var = *lit < 0 ? -*lit : *lit;
            if (var > *vars)
                throw Error(ErrorCode::Semantic,
                            "variable " + std::to_string(var) + " exceeds declared " +
                                std::to_string(*vars),
                            line);
            if (pending.empty())
                pending_line = line;
            pending.push_back({static_cast<int>(var), *lit < 0});
        }
    });

    if (!vars)
        throw Error(ErrorCode::Syntax, "missing problem line", last_line + 1);
    if (!pending.empty())
        throw Error(ErrorCode::Syntax, "unterminated clause", pending_line);
    if (static_cast<long long>(f.clauses.size()) != *declared)
        throw Error(ErrorCode::Semantic,
                    "declared " + std::to_string(*declared) + " clauses, found " +
                        std::to_string(f.clauses.size()),
                    last_line + 1);
    return f;
}

std::string serialize_dimacs(const Formula3Sat& formula)
{
    std::ostringstream os;
    os << "p cnf " << formula.num_vars << " " << formula.clauses.size() << "\n";
    for (const auto& clause : formula.clauses) {
        for (const auto& lit : clause)
            os << (lit.negated ? -lit.var : lit.var) << " ";
        os << "0\n";
    }
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace pafp
