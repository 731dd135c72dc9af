// Command-line front end for the embedding library.
//
// Subcommands:
//   capacities   first entries of the capacity sequence N(a,b)
//   decide       embedding decision int E(a,b) -> int E(c,d)
//   counts       one lattice count L_n(a,b)
//   gf           generating-function coefficients, plain or difference
//   capacity-fn  capacity function c(a): certified interval, optional sweep
//   verify-lemma sampled check of the generating-function ordering criterion
//   fill-check   ball filling int E(1,n^2) -> B(n), or the convolution table
//
// Every subcommand emits one document on stdout (or to --out): JSON by
// default, CSV with --format csv.  The JSON document wraps the same table the
// CSV contains (identical cells), plus the command name and an echo of the
// parsed parameters.  All table cells are canonical strings, so identical
// invocations are byte-identical.
//
// Exit codes: 0 success or Embeds, 1 Obstructed, 2 usage/domain/resource
// error, 3 internal consistency failure (a bug, never bad input).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "echcap/echcap.hpp"

namespace {

using echcap::den;
using echcap::Int;
using echcap::num;
using echcap::Rat;
using ordered_json = nlohmann::ordered_json;

struct Document {
    std::string command;
    ordered_json parameters = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string render_json(const Document& doc) {
    ordered_json j;
    j["command"] = doc.command;
    j["parameters"] = doc.parameters;
    ordered_json rows = ordered_json::array();
    for (const auto& row : doc.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t i = 0; i < doc.columns.size(); ++i) obj[doc.columns[i]] = row[i];
        rows.push_back(std::move(obj));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string render_csv(const Document& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        if (i) out += ',';
        out += doc.columns[i];
    }
    out += '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

void emit(const Document& doc, const std::string& format, const std::string& out_path) {
    std::string text = format == "csv" ? render_csv(doc) : render_json(doc);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw echcap::DomainError("cannot open output file: " + out_path);
    f << text;
}

Rat parse_rat_arg(const std::string& text, const char* flag) {
    auto r = echcap::try_parse_rat(text);
    if (!r) throw echcap::DomainError(std::string(flag) + ": expected integer or p/q, got '" +
                                      text + "'");
    return *r;
}

std::pair<Rat, Rat> parse_pair_arg(const std::string& text, const char* flag) {
    auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw echcap::DomainError(std::string(flag) + ": expected two comma-separated rationals");
    return {parse_rat_arg(text.substr(0, comma), flag),
            parse_rat_arg(text.substr(comma + 1), flag)};
}

std::string fmt(const Rat& r) { return echcap::format_rat(r); }
std::string fmt(const Int& v) { return v.str(); }

// Columns shared by decide and fill-check.
void append_outcome_columns(Document& doc) {
    for (const char* c : {"verdict", "route", "scale", "scaled_a", "scaled_b", "scaled_c",
                          "scaled_d", "witness_index", "witness_lhs", "witness_rhs"})
        doc.columns.push_back(c);
}

void append_outcome_row(Document& doc, const echcap::DecisionOutcome& out,
                        std::vector<std::string> prefix = {}) {
    auto& row = doc.rows.emplace_back(std::move(prefix));
    row.push_back(out.verdict == echcap::Verdict::Embeds ? "Embeds" : "Obstructed");
    row.push_back(out.route);
    row.push_back(fmt(out.scale));
    for (const Int& v : out.scaled) row.push_back(fmt(v));
    if (out.witness) {
        row.push_back(fmt(out.witness->index));
        row.push_back(fmt(out.witness->lhs));
        row.push_back(fmt(out.witness->rhs));
    } else {
        row.insert(row.end(), 3, "");
    }
}

// L_n(a,b) for rational axes: clear denominators (the count is invariant
// under scaling all of a, b, n together) and stream the recurrence, in
// int64 when the upper envelope proves the values fit.
Int count_at(const Rat& a, const Rat& b, long long n) {
    if (a <= 0 || b <= 0) throw echcap::DomainError("counts: axes must be positive");
    if (n < 0) throw echcap::DomainError("counts: index must be nonnegative");
    Int lam = echcap::lcm_int(den(a), den(b));
    Int A = num(a * lam), B = num(b * lam);
    Int idx = lam * n;
    if (A + B + 2 > echcap::kMaxStreamWindow)
        throw echcap::ResourceLimitError("counts: scaled axes exceed the streaming window");
    if (idx > echcap::kScanIndexMax)
        throw echcap::ResourceLimitError("counts: scaled index exceeds the scan budget");
    long long la = A.convert_to<long long>(), lb = B.convert_to<long long>();
    long long li = idx.convert_to<long long>();
    Int bound = echcap::rat_floor(echcap::count_upper_envelope(A, B).eval(idx)) + 1;
    if (bound * 8 < (Int(1) << 62)) {
        echcap::CountStream<long long> s(la, lb);
        long long v = 0;
        for (long long i = 0; i <= li; ++i) v = s.next();
        return Int(v);
    }
    echcap::CountStream<Int> s(la, lb);
    Int v;
    for (long long i = 0; i <= li; ++i) v = s.next();
    return v;
}

int run(int argc, char** argv) {
    CLI::App app{"ellipsoid embedding capacities: sequences, decisions, capacity function"};
    app.require_subcommand(1);

    std::string format = "json", out_path;
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--out", out_path, "write the document to a file instead of stdout");
    };

    std::string arg_a, arg_b, arg_c, arg_d, arg_src, arg_dst, arg_tol = "1/1000", arg_sweep;
    long long arg_count = 0, arg_n = 0, arg_grid = 64, arg_conv = -1, arg_order = 0;

    auto* cmd_capacities = app.add_subcommand("capacities", "capacity sequence N(a,b)");
    cmd_capacities->add_option("--a", arg_a)->required();
    cmd_capacities->add_option("--b", arg_b)->required();
    cmd_capacities->add_option("--count", arg_count, "number of entries")->required();
    add_io(cmd_capacities);

    auto* cmd_decide = app.add_subcommand("decide", "does int E(a,b) embed into int E(c,d)?");
    cmd_decide->add_option("--src", arg_src, "source ellipsoid a,b")->required();
    cmd_decide->add_option("--dst", arg_dst, "target ellipsoid c,d")->required();
    add_io(cmd_decide);

    auto* cmd_counts = app.add_subcommand("counts", "lattice count L_n(a,b)");
    cmd_counts->add_option("--a", arg_a)->required();
    cmd_counts->add_option("--b", arg_b)->required();
    cmd_counts->add_option("--n", arg_n, "count index")->required();
    add_io(cmd_counts);

    auto* cmd_gf = app.add_subcommand("gf", "generating-function coefficients");
    cmd_gf->add_option("--a", arg_a)->required();
    cmd_gf->add_option("--b", arg_b)->required();
    cmd_gf->add_option("--c", arg_c, "difference against g_{c,d}: needs --d");
    cmd_gf->add_option("--d", arg_d, "difference against g_{c,d}: needs --c");
    cmd_gf->add_option("--count", arg_count, "number of coefficients")->required();
    add_io(cmd_gf);

    auto* cmd_capfn = app.add_subcommand("capacity-fn", "capacity function c(a)");
    cmd_capfn->add_option("--a", arg_a, "single evaluation point");
    cmd_capfn->add_option("--tol", arg_tol, "interval width target")->capture_default_str();
    cmd_capfn->add_option("--sweep", arg_sweep, "range lo:hi:step instead of --a");
    add_io(cmd_capfn);

    auto* cmd_lemma = app.add_subcommand("verify-lemma",
                                         "sampled generating-function ordering check");
    cmd_lemma->add_option("--a", arg_a)->required();
    cmd_lemma->add_option("--b", arg_b)->required();
    cmd_lemma->add_option("--c", arg_c)->required();
    cmd_lemma->add_option("--d", arg_d)->required();
    cmd_lemma->add_option("--grid", arg_grid, "uniform grid size")->capture_default_str();
    add_io(cmd_lemma);

    auto* cmd_fill = app.add_subcommand("fill-check", "ball filling int E(1,n^2) -> B(n)");
    cmd_fill->add_option("--n", arg_n, "filling parameter")->required();
    cmd_fill->add_option("--conv", arg_conv,
                         "emit the convolution inequality table up to this index instead");
    add_io(cmd_fill);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Document doc;
    int exit_code = 0;

    if (*cmd_capacities) {
        Rat a = parse_rat_arg(arg_a, "--a"), b = parse_rat_arg(arg_b, "--b");
        if (arg_count < 0) throw echcap::DomainError("--count: must be nonnegative");
        if (arg_count > 2000000) throw echcap::ResourceLimitError("--count: too many entries");
        doc.command = "capacities";
        doc.parameters = {{"a", fmt(a)}, {"b", fmt(b)}, {"count", arg_count}};
        doc.columns = {"index", "value"};
        auto values = echcap::gen_capacities(echcap::Ellipsoid(a, b),
                                             static_cast<std::size_t>(arg_count));
        for (std::size_t i = 0; i < values.size(); ++i)
            doc.rows.push_back({std::to_string(i), fmt(values[i])});
    } else if (*cmd_decide) {
        auto [a, b] = parse_pair_arg(arg_src, "--src");
        auto [c, d] = parse_pair_arg(arg_dst, "--dst");
        doc.command = "decide";
        doc.parameters = {{"src", fmt(a) + "," + fmt(b)}, {"dst", fmt(c) + "," + fmt(d)}};
        append_outcome_columns(doc);
        auto out = echcap::embeds(a, b, c, d);
        append_outcome_row(doc, out);
        exit_code = out.verdict == echcap::Verdict::Embeds ? 0 : 1;
    } else if (*cmd_counts) {
        Rat a = parse_rat_arg(arg_a, "--a"), b = parse_rat_arg(arg_b, "--b");
        doc.command = "counts";
        doc.parameters = {{"a", fmt(a)}, {"b", fmt(b)}, {"n", arg_n}};
        doc.columns = {"n", "count"};
        doc.rows.push_back({std::to_string(arg_n), fmt(count_at(a, b, arg_n))});
    } else if (*cmd_gf) {
        Rat a = parse_rat_arg(arg_a, "--a"), b = parse_rat_arg(arg_b, "--b");
        if (den(a) != 1 || den(b) != 1 || a <= 0 || b <= 0)
            throw echcap::DomainError("gf: axes must be positive integers");
        if (arg_c.empty() != arg_d.empty())
            throw echcap::DomainError("gf: --c and --d must be given together");
        if (arg_count < 1) throw echcap::DomainError("--count: must be positive");
        if (arg_count > 2000000) throw echcap::ResourceLimitError("--count: too many entries");
        doc.command = "gf";
        doc.columns = {"index", "coefficient"};
        std::optional<echcap::RationalSeries> series;
        if (arg_c.empty()) {
            doc.parameters = {{"a", fmt(a)}, {"b", fmt(b)}, {"count", arg_count}};
            series = echcap::g_series(num(a).convert_to<long long>(),
                                      num(b).convert_to<long long>());
        } else {
            Rat c = parse_rat_arg(arg_c, "--c"), d = parse_rat_arg(arg_d, "--d");
            if (den(c) != 1 || den(d) != 1 || c <= 0 || d <= 0)
                throw echcap::DomainError("gf: axes must be positive integers");
            doc.parameters = {{"a", fmt(a)}, {"b", fmt(b)}, {"c", fmt(c)}, {"d", fmt(d)},
                              {"count", arg_count}};
            series = echcap::difference_series(
                num(a).convert_to<long long>(), num(b).convert_to<long long>(),
                num(c).convert_to<long long>(), num(d).convert_to<long long>());
        }
        for (long long i = 0; i < arg_count; ++i)
            doc.rows.push_back({std::to_string(i),
                                fmt(series->coefficient(static_cast<std::size_t>(i)))});
    } else if (*cmd_capfn) {
        Rat tol = parse_rat_arg(arg_tol, "--tol");
        doc.command = "capacity-fn";
        doc.columns = {"a", "lower", "upper", "exact"};
        auto push = [&](const echcap::CapacityResult& r) {
            doc.rows.push_back({fmt(r.input), fmt(r.lower), fmt(r.upper),
                                r.exact ? fmt(*r.exact) : std::string()});
        };
        if (arg_sweep.empty()) {
            if (arg_a.empty())
                throw echcap::DomainError("capacity-fn: need --a or --sweep");
            Rat a = parse_rat_arg(arg_a, "--a");
            doc.parameters = {{"a", fmt(a)}, {"tol", fmt(tol)}};
            push(echcap::capacity_interval(a, tol));
        } else {
            if (!arg_a.empty())
                throw echcap::DomainError("capacity-fn: --a and --sweep are exclusive");
            auto c1 = arg_sweep.find(':'), c2 = arg_sweep.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos ||
                arg_sweep.find(':', c2 + 1) != std::string::npos)
                throw echcap::DomainError("--sweep: expected lo:hi:step");
            Rat lo = parse_rat_arg(arg_sweep.substr(0, c1), "--sweep");
            Rat hi = parse_rat_arg(arg_sweep.substr(c1 + 1, c2 - c1 - 1), "--sweep");
            Rat step = parse_rat_arg(arg_sweep.substr(c2 + 1), "--sweep");
            if (step <= 0) throw echcap::DomainError("--sweep: step must be positive");
            if (lo > hi) throw echcap::DomainError("--sweep: lo must not exceed hi");
            if ((hi - lo) / step > 100000)
                throw echcap::ResourceLimitError("--sweep: too many evaluation points");
            doc.parameters = {{"sweep", fmt(lo) + ":" + fmt(hi) + ":" + fmt(step)},
                              {"tol", fmt(tol)}};
            for (Rat a = lo; a <= hi; a += step) push(echcap::capacity_interval(a, tol));
        }
    } else if (*cmd_lemma) {
        Rat a = parse_rat_arg(arg_a, "--a"), b = parse_rat_arg(arg_b, "--b");
        Rat c = parse_rat_arg(arg_c, "--c"), d = parse_rat_arg(arg_d, "--d");
        if (arg_grid < 1 || arg_grid > 100000)
            throw echcap::DomainError("--grid: must be in [1, 100000]");
        doc.command = "verify-lemma";
        doc.parameters = {{"a", fmt(a)}, {"b", fmt(b)}, {"c", fmt(c)}, {"d", fmt(d)},
                          {"grid", arg_grid}};
        doc.columns = {"z", "left", "right", "margin", "status", "holds"};
        auto report = echcap::check_ordering_criterion(a, b, c, d,
                                                       static_cast<int>(arg_grid));
        for (const auto& row : report.rows)
            doc.rows.push_back({fmt(row.z), fmt(row.left), fmt(row.right), fmt(row.margin),
                                row.certified ? "certified" : "uncertified",
                                row.margin >= 0 ? "yes" : "no"});
    } else if (*cmd_fill) {
        if (arg_n < 1) throw echcap::DomainError("--n: must be a positive integer");
        doc.command = "fill-check";
        if (arg_conv < 0) {
            doc.parameters = {{"n", arg_n}};
            doc.columns = {"n"};
            append_outcome_columns(doc);
            auto out = echcap::verify_ball_filling(arg_n);
            append_outcome_row(doc, out, {std::to_string(arg_n)});
            exit_code = out.verdict == echcap::Verdict::Embeds ? 0 : 1;
        } else {
            if (arg_n < 2) throw echcap::DomainError("--conv: needs --n >= 2");
            if (arg_conv > 1000000)
                throw echcap::ResourceLimitError("--conv: index bound too large");
            doc.parameters = {{"n", arg_n}, {"conv", arg_conv}};
            doc.columns = {"index", "lhs", "rhs", "holds"};
            auto report = echcap::convolution_identity_check(arg_n, arg_conv);
            for (const auto& e : report.entries)
                doc.rows.push_back({std::to_string(e.index), fmt(e.lhs), fmt(e.rhs),
                                    e.holds ? "yes" : "no"});
            exit_code = report.all_hold ? 0 : 1;
        }
    }

    emit(doc, format, out_path);
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const echcap::InternalConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const echcap::InvalidSeriesError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const echcap::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const echcap::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
