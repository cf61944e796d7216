#include "sft/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sft/errors.hpp"

namespace sft {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json_text(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError("invalid " + what + " JSON: " + e.what());
    }
}

bool looks_like_json(const std::string& s)
{
    auto p = s.find_first_not_of(" \t\r\n");
    return p != std::string::npos && s[p] == '{';
}

template <class T>
T get_field(const Json& j, const char* key)
{
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

Point point_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("expected an integer pair [x, y], got " + j.dump());
    return {j[0].get<Coord>(), j[1].get<Coord>()};
}

std::vector<std::int64_t> parse_ints(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError("expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

FiniteLattice generator(const std::string& name, const std::vector<std::int64_t>& a)
{
    auto need = [&](std::size_t k) {
        if (a.size() != k)
            throw ParseError("generator '" + name + "' takes " + std::to_string(k) + " parameters");
    };
    if (name == "rect") {
        need(2);
        return rectangle({0, 0}, a[0], a[1]);
    }
    if (name == "square") {
        need(1);
        return rectangle({0, 0}, a[0], a[0]);
    }
    if (name == "omega_q") {
        need(2);
        return omega_q(static_cast<int>(a[0]), static_cast<int>(a[1]));
    }
    if (name == "omega_q_plus") {
        need(2);
        return omega_q_plus(static_cast<int>(a[0]), static_cast<int>(a[1]));
    }
    if (name == "lshape") {
        need(1);
        return lshape(a[0]);
    }
    if (name == "staircase") {
        need(1);
        return staircase(a[0]);
    }
    if (name == "stick") {
        need(4);
        return stick_augmented(a[0], {a[1], a[2]}, a[3]);
    }
    throw ParseError("unknown lattice generator '" + name + "'");
}

}  // namespace

FiniteLattice lattice_from_json(const Json& j)
{
    const auto type = get_field<std::string>(j, "type");
    if (type == "points") {
        const Json& pts = j.contains("points") ? j.at("points") : throw ParseError("missing field 'points'");
        if (!pts.is_array()) throw ParseError("'points' must be an array");
        std::vector<Point> v;
        for (const auto& p : pts) v.push_back(point_from_json(p));
        return FiniteLattice::from_points(v);
    }
    if (type == "generator") {
        const auto name = get_field<std::string>(j, "name");
        const Json params = j.value("params", Json::object());
        auto num = [&](const char* k) { return get_field<std::int64_t>(params, k); };
        if (name == "rect") return generator(name, {num("m"), num("n")});
        if (name == "square" || name == "lshape" || name == "staircase") return generator(name, {num("n")});
        if (name == "omega_q" || name == "omega_q_plus") return generator(name, {num("q"), num("n")});
        if (name == "stick") {
            if (!params.contains("v")) throw ParseError("missing field 'v'");
            Point v = point_from_json(params.at("v"));
            return generator(name, {num("n"), v.x, v.y, num("b")});
        }
        throw ParseError("unknown lattice generator '" + name + "'");
    }
    throw ParseError("unknown lattice type '" + type + "'");
}

Json lattice_to_json(const FiniteLattice& lattice)
{
    Json pts = Json::array();
    lattice.for_each([&](Point p) { pts.push_back({p.x, p.y}); });
    return {{"type", "points"}, {"points", pts}};
}

FiniteLattice lattice_from_shorthand(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("lattice shorthand needs 'name:params', got '" + text + "'");
    return generator(text.substr(0, colon), parse_ints(text.substr(colon + 1)));
}

FiniteLattice load_lattice(const std::string& arg)
{
    if (looks_like_json(arg)) return lattice_from_json(parse_json_text(arg, "lattice"));
    if (auto colon = arg.find(':'); colon != std::string::npos) {
        static const char* names[] = {"rect", "square", "omega_q", "omega_q_plus", "lshape", "staircase", "stick"};
        for (const char* n : names)
            if (arg.compare(0, colon, n) == 0) return lattice_from_shorthand(arg);
    }
    return lattice_from_json(parse_json_text(read_file(arg), "lattice"));
}

SftSpec spec_from_json(const Json& j)
{
    const int n = get_field<int>(j, "N");
    const std::string name = j.value("name", std::string("custom"));
    const Json& list = j.contains("forbidden") ? j.at("forbidden") : throw ParseError("missing field 'forbidden'");
    if (!list.is_array()) throw ParseError("'forbidden' must be an array of patterns");
    std::vector<ForbiddenPattern> forbidden;
    for (const auto& pat : list) {
        if (!pat.is_array() || pat.empty()) throw ParseError("each forbidden pattern must be a nonempty array");
        std::vector<PatternCell> cells;
        for (const auto& c : pat) {
            if (!c.is_array() || c.size() != 3) throw ParseError("pattern cells are [dx, dy, symbol], got " + c.dump());
            for (const auto& x : c)
                if (!x.is_number_integer()) throw ParseError("pattern cells must be integers, got " + c.dump());
            cells.push_back({{c[0].get<Coord>(), c[1].get<Coord>()}, c[2].get<Symbol>()});
        }
        forbidden.emplace_back(std::move(cells));
    }
    return SftSpec(n, std::move(forbidden), name);
}

Json spec_to_json(const SftSpec& spec)
{
    Json list = Json::array();
    for (const auto& f : spec.forbidden()) {
        Json pat = Json::array();
        for (const auto& c : f.cells()) pat.push_back({c.offset.x, c.offset.y, c.symbol});
        list.push_back(pat);
    }
    return {{"N", spec.alphabet_size()}, {"name", spec.name()}, {"forbidden", list}};
}

SftSpec load_spec(const std::string& arg)
{
    if (looks_like_json(arg)) return spec_from_json(parse_json_text(arg, "spec"));
    try {
        return builtin_spec(arg);
    } catch (const ParseError&) {
        std::ifstream probe(arg);
        if (!probe) throw;
    }
    return spec_from_json(parse_json_text(read_file(arg), "spec"));
}

ExpandingSystem system_from_json(const Json& j)
{
    const auto kind = get_field<std::string>(j, "system");
    if (kind == "squares") return squares();
    if (kind == "lshape") return lshape_system();
    if (kind == "staircase") return staircase_system();
    if (kind == "omega_q") return omega_q_system(get_field<int>(j, "q"));
    if (kind == "stick") {
        if (!j.contains("v")) throw ParseError("missing field 'v'");
        return stick_system(point_from_json(j.at("v")), get_field<double>(j, "a_target"));
    }
    if (kind == "rect")
        return rect_system(SizeExpression::parse(get_field<std::string>(j, "w")),
                           SizeExpression::parse(get_field<std::string>(j, "h")));
    throw ParseError("unknown system '" + kind + "'");
}

ExpandingSystem load_system(const std::string& arg)
{
    if (looks_like_json(arg)) return system_from_json(parse_json_text(arg, "system"));
    if (arg == "squares" || arg == "lshape" || arg == "staircase") return system_from_json({{"system", arg}});
    return system_from_json(parse_json_text(read_file(arg), "system"));
}

Format parse_format(const std::string& text)
{
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    if (text == "plot") return Format::plot;
    throw ParseError("unknown format '" + text + "'");
}

std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round_real(double x)
{
    if (!std::isfinite(x)) return x;
    return std::strtod(format_real(x).c_str(), nullptr);
}

std::string render_count(const CountResult& r, Format f)
{
    switch (f) {
    case Format::csv:
        return "value,mode,lattice_size\n" + to_decimal(r.value) + "," + r.mode.str() + "," +
               std::to_string(r.lattice_size) + "\n";
    case Format::json: {
        // The count stays a string: JSON readers commonly truncate large integers.
        Json j{{"value", to_decimal(r.value)}, {"mode", r.mode.str()}, {"lattice_size", r.lattice_size}};
        return j.dump(2) + "\n";
    }
    case Format::plot: return std::to_string(r.lattice_size) + " " + format_real(log_of(r.value)) + "\n";
    }
    return {};
}

std::string render_table(const RectTable& t, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::csv:
        out << "m,n,log_count,ratio\n";
        for (int n = 1; n <= t.N; ++n)
            for (int m = 1; m <= t.M; ++m)
                out << m << ',' << n << ',' << format_real(t.log_count(m, n)) << ',' << format_real(t.ratio(m, n))
                    << '\n';
        break;
    case Format::json: {
        Json rows = Json::array();
        for (int n = 1; n <= t.N; ++n)
            for (int m = 1; m <= t.M; ++m)
                rows.push_back({{"m", m},
                                {"n", n},
                                {"log_count", round_real(t.log_count(m, n))},
                                {"ratio", round_real(t.ratio(m, n))}});
        Json j{{"rows", rows},
               {"estimate", round_real(t.estimate)},
               {"estimator", to_string(EstimatorKind::infimum)},
               {"argmin", {t.argmin_m, t.argmin_n}}};
        out << j.dump(2) << '\n';
        break;
    }
    case Format::plot:
        // One block per height n, separated by blank lines.
        for (int n = 1; n <= t.N; ++n) {
            if (n > 1) out << '\n';
            for (int m = 1; m <= t.M; ++m) out << m << ' ' << format_real(t.ratio(m, n)) << '\n';
        }
        break;
    }
    return out.str();
}

std::string render_sequence(const EntropySequence& s, Format f)
{
    std::ostringstream out;
    switch (f) {
    case Format::csv:
        out << "n,size,log_count,ratio\n";
        for (const auto& r : s.records)
            out << r.index << ',' << r.size << ',' << format_real(r.log_count) << ',' << format_real(r.ratio) << '\n';
        break;
    case Format::json: {
        Json rows = Json::array();
        for (const auto& r : s.records)
            rows.push_back({{"n", r.index},
                            {"size", r.size},
                            {"log_count", round_real(r.log_count)},
                            {"ratio", round_real(r.ratio)}});
        Json j{{"rows", rows},
               {"estimate", round_real(s.estimate)},
               {"estimator", to_string(s.kind)},
               {"unconstrained", s.unconstrained}};
        out << j.dump(2) << '\n';
        break;
    }
    case Format::plot:
        for (const auto& r : s.records) out << r.index << ' ' << format_real(r.ratio) << '\n';
        break;
    }
    return out.str();
}

}  // namespace sft
