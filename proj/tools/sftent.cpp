// sftent: pattern counts and spatial entropies of 2D shifts of finite type.
//
// Exit codes: 0 success or reproduction pass, 1 reproduction failure,
// 2 usage or parse error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sft/counting.hpp"
#include "sft/entropy.hpp"
#include "sft/errors.hpp"
#include "sft/io.hpp"
#include "sft/mixing.hpp"
#include "sft/reproduce.hpp"
#include "sft/systems.hpp"

namespace {

using namespace sft;

struct Range {
    std::int64_t lo = 1;
    std::int64_t hi = 8;
};

Range parse_range(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("--n-range expects a:b, got '" + text + "'");
    try {
        Range r{std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
        if (r.lo > r.hi) throw ParseError("--n-range is empty: '" + text + "'");
        return r;
    } catch (const std::logic_error&) {
        throw ParseError("--n-range expects integers a:b, got '" + text + "'");
    }
}

std::pair<int, int> parse_table(const std::string& text)
{
    auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw ParseError("--table expects MxN, got '" + text + "'");
    try {
        int m = std::stoi(text.substr(0, x)), n = std::stoi(text.substr(x + 1));
        if (m < 1 || n < 1) throw ParseError("--table sizes must be positive");
        return {m, n};
    } catch (const std::logic_error&) {
        throw ParseError("--table expects MxN, got '" + text + "'");
    }
}

Point parse_direction(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("--direction expects x,y, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1))};
    } catch (const std::logic_error&) {
        throw ParseError("--direction expects integers x,y, got '" + text + "'");
    }
}

struct Options {
    std::string spec = "golden-mean-h";
    std::string lattice;
    std::string system;
    std::string n_range;
    std::string table = "12x12";
    std::string mode = "local";
    std::string format = "csv";
    std::string out;
    int budget = 0;
    int terms = 40;
    int q = 2;
    int n = 6;
    std::string direction = "1,0";
    std::string target;
    int m_max = 3;
    std::string tiling = "bounding_rectangle";
    int gap = 1;
    int window = 3;
    int extent = 6;
    std::string variant = "full";
};

Budget make_budget(const Options& o)
{
    Budget b;
    if (o.budget > 0) b.bruteforce_bits = o.budget;
    return b;
}

void emit(const Options& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw ParseError("cannot write '" + o.out + "'");
    f << text;
}

int cmd_count(const Options& o, bool format_given)
{
    CountResult r = count(load_lattice(o.lattice), load_spec(o.spec), CountMode::parse(o.mode), make_budget(o));
    if (format_given) {
        emit(o, render_count(r, parse_format(o.format)));
    } else {
        emit(o, to_decimal(r.value) + "\nmode " + r.mode.str() + "\nlattice_size " + std::to_string(r.lattice_size) + "\n");
    }
    return 0;
}

int cmd_entropy_rect(const Options& o)
{
    auto [m, n] = parse_table(o.table);
    emit(o, render_table(rect_entropy_table(load_spec(o.spec), m, n, make_budget(o)), parse_format(o.format)));
    return 0;
}

int cmd_entropy_omega(const Options& o)
{
    Range r = parse_range(o.n_range.empty() ? "1:8" : o.n_range);
    auto seq = omega_entropy(load_spec(o.spec), load_system(o.system), r.lo, r.hi, make_budget(o));
    emit(o, render_sequence(seq, parse_format(o.format)));
    return 0;
}

int cmd_projectional(const Options& o)
{
    Range r = parse_range(o.n_range.empty() ? "1:24" : o.n_range);
    auto seq = projectional_entropy(load_spec(o.spec), parse_direction(o.direction), static_cast<int>(r.hi),
                                    CountMode::parse(o.mode), make_budget(o));
    emit(o, render_sequence(seq, parse_format(o.format)));
    return 0;
}

int cmd_reproduce(const Options& o)
{
    ReproduceReport rep = reproduce(o.target, {o.q, o.n, o.terms});
    emit(o, rep.str());
    return rep.passed() ? 0 : 1;
}

int cmd_conditions(const Options& o)
{
    Range r = parse_range(o.n_range.empty() ? "1:20" : o.n_range);
    TessellationChoice choice;
    if (o.tiling == "self") choice.kind = TessellationChoice::Kind::self_if_tessellation;
    else if (o.tiling != "bounding_rectangle") throw ParseError("--tiling is bounding_rectangle or self");
    ConditionReport rep = condition_report(load_system(o.system), r.lo, r.hi, o.m_max, choice);
    const Format f = parse_format(o.format);
    std::ostringstream out;
    if (f == Format::json) {
        Json rows = Json::array();
        for (const auto& row : rep.rows) {
            Json h = Json::array(), v = Json::array(), b = Json::array();
            for (double x : row.run_ratio_h) h.push_back(round_real(x));
            for (double x : row.run_ratio_v) v.push_back(round_real(x));
            for (double x : row.block_ratio) b.push_back(round_real(x));
            rows.push_back({{"n", row.n},
                            {"size", row.size},
                            {"boundary_ratio", round_real(row.boundary_ratio)},
                            {"complement_ratio", round_real(row.complement_ratio)},
                            {"tiling", row.tiling},
                            {"run_ratio_h", h},
                            {"run_ratio_v", v},
                            {"block_ratio", b}});
        }
        Json verdicts{{"boundary", to_string(rep.boundary)}, {"complement", to_string(rep.complement)}};
        for (std::size_t m = 0; m < rep.run_h.size(); ++m) {
            verdicts["run_h_" + std::to_string(m + 1)] = to_string(rep.run_h[m]);
            verdicts["run_v_" + std::to_string(m + 1)] = to_string(rep.run_v[m]);
        }
        for (std::size_t i = 0; i < rep.block.size(); ++i)
            verdicts["block_" + std::to_string(rep.block_sizes[i].first) + "x" + std::to_string(rep.block_sizes[i].second)] =
                to_string(rep.block[i]);
        out << Json{{"system", rep.system}, {"rows", rows}, {"verdicts", verdicts}}.dump(2) << '\n';
    } else if (f == Format::plot) {
        for (const auto& row : rep.rows) out << row.n << ' ' << format_real(row.boundary_ratio) << '\n';
    } else {
        out << "n,size,boundary_size,boundary_ratio,complement_size,complement_ratio,tiling";
        for (int m = 1; m <= o.m_max; ++m) out << ",run_h_" << m << ",run_v_" << m;
        for (const auto& [k, l] : rep.block_sizes) out << ",block_" << k << 'x' << l;
        out << '\n';
        for (const auto& row : rep.rows) {
            out << row.n << ',' << row.size << ',' << row.boundary_size << ',' << format_real(row.boundary_ratio) << ','
                << row.complement_size << ',' << format_real(row.complement_ratio) << ',' << row.tiling;
            for (std::size_t m = 0; m < row.run_ratio_h.size(); ++m)
                out << ',' << format_real(row.run_ratio_h[m]) << ',' << format_real(row.run_ratio_v[m]);
            for (double x : row.block_ratio) out << ',' << format_real(x);
            out << '\n';
        }
    }
    emit(o, out.str());
    return 0;
}

int cmd_gluing(const Options& o)
{
    const SftSpec spec = load_spec(o.spec);
    GluingVerdict v = verify_block_gluing(spec, o.gap, o.window, o.extent, parse_gluing_variant(o.variant), make_budget(o));
    Json j{{"spec", v.spec_name},
           {"gap", v.gap},
           {"window", v.window},
           {"extent", v.extent},
           {"variant", to_string(v.variant)},
           {"verified", v.verified},
           {"pairs_checked", v.pairs_checked}};
    if (v.counterexample) {
        const auto& c = *v.counterexample;
        j["counterexample"] = {{"first", c.first.values},
                               {"second", c.second.values},
                               {"offset", {c.offset.x, c.offset.y}},
                               {"distance", round_real(c.distance)},
                               {"replayed_count", to_decimal(replay_counterexample(c, spec, make_budget(o)))}};
    }
    emit(o, j.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pattern counts and spatial entropies of 2D shifts of finite type.\n"
                 "All logarithms are natural; reals are printed with 12 significant digits."};
    app.require_subcommand(1);
    Options o;

    auto add_spec = [&](CLI::App* c) {
        c->add_option("--spec", o.spec, "Builtin (golden-mean-h, golden-mean-v, hard-squares, period-2-h, full:N), "
                                        "inline JSON or JSON file")
            ->capture_default_str();
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "csv, json or plot")->capture_default_str();
        c->add_option("--out", o.out, "Write output to PATH instead of stdout");
        c->add_option("--budget", o.budget, "Brute-force limit in binary cells: N^|L| <= 2^CELLS");
    };

    auto* count_cmd = app.add_subcommand("count", "Count locally admissible patterns on a lattice");
    add_spec(count_cmd);
    add_common(count_cmd);
    count_cmd->add_option("--lattice", o.lattice, "rect:m,n, square:n, omega_q:q,n, omega_q_plus:q,n, lshape:n, "
                                                  "staircase:n, stick:n,vx,vy,b, inline JSON or JSON file")
        ->required();
    count_cmd->add_option("--mode", o.mode, "local or ext:m")->capture_default_str();

    auto* rect_cmd = app.add_subcommand("entropy-rect", "Rectangular entropy table (1/mn) log Gamma_{m x n}");
    add_spec(rect_cmd);
    add_common(rect_cmd);
    rect_cmd->add_option("--table", o.table, "Table size MxN")->capture_default_str();

    auto* omega_cmd = app.add_subcommand("entropy-omega", "Entropy ratios along an expanding system");
    add_spec(omega_cmd);
    add_common(omega_cmd);
    omega_cmd->add_option("--system", o.system, "squares, lshape, staircase, inline JSON or JSON file")->required();
    omega_cmd->add_option("--n-range", o.n_range, "Index range a:b (default 1:8)");

    auto* proj_cmd = app.add_subcommand("projectional", "Entropy of restrictions to a line Z v");
    add_spec(proj_cmd);
    add_common(proj_cmd);
    proj_cmd->add_option("--direction", o.direction, "Primitive vector x,y")->capture_default_str();
    proj_cmd->add_option("--n-range", o.n_range, "Segment lengths 1:b (default 1:24)");
    proj_cmd->add_option("--mode", o.mode, "local or ext:m")->capture_default_str();

    auto* repro_cmd = app.add_subcommand("reproduce", "Run one reproduction experiment");
    std::string targets;
    for (const auto& t : reproduce_targets()) targets += (targets.empty() ? "" : ", ") + t;
    repro_cmd->add_option("target", o.target, "One of: " + targets)->required();
    repro_cmd->add_option("--q", o.q, "Multiplier q")->capture_default_str();
    repro_cmd->add_option("--n", o.n, "Level n")->capture_default_str();
    repro_cmd->add_option("--terms", o.terms, "Series terms K")->capture_default_str();
    repro_cmd->add_option("--out", o.out, "Write output to PATH instead of stdout");

    auto* cond_cmd = app.add_subcommand("conditions", "Boundary, complement, run-length and block ratios of a system");
    add_common(cond_cmd);
    cond_cmd->add_option("--system", o.system, "squares, lshape, staircase, inline JSON or JSON file")->required();
    cond_cmd->add_option("--n-range", o.n_range, "Index range a:b (default 1:20)");
    cond_cmd->add_option("--m-max", o.m_max, "Largest run length reported")->capture_default_str();
    cond_cmd->add_option("--tiling", o.tiling, "bounding_rectangle or self")->capture_default_str();

    auto* glue_cmd = app.add_subcommand("gluing", "Bounded block-gluing check");
    add_spec(glue_cmd);
    glue_cmd->add_option("--gap", o.gap, "Gap M")->capture_default_str();
    glue_cmd->add_option("--window", o.window, "Block side w (at most 4)")->capture_default_str();
    glue_cmd->add_option("--extent", o.extent, "Largest offset coordinate e")->capture_default_str();
    glue_cmd->add_option("--variant", o.variant, "full, horizontal or vertical")->capture_default_str();
    glue_cmd->add_option("--out", o.out, "Write output to PATH instead of stdout");
    glue_cmd->add_option("--budget", o.budget, "Brute-force limit in binary cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*count_cmd) return cmd_count(o, count_cmd->count("--format") > 0);
        if (*rect_cmd) return cmd_entropy_rect(o);
        if (*omega_cmd) return cmd_entropy_omega(o);
        if (*proj_cmd) return cmd_projectional(o);
        if (*repro_cmd) return cmd_reproduce(o);
        if (*cond_cmd) return cmd_conditions(o);
        if (*glue_cmd) return cmd_gluing(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
