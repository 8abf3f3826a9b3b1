// domcomplex: build D_{n,k}, run the Morse matchings, compute homology and
// replay the expected-value table.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage / unsupported
// input, 3 I/O or file format error, 4 gradient cycle found, 5 budget exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcomplex/domcomplex.hpp"

#ifndef DOMCOMPLEX_EXPECTED_TABLE
#define DOMCOMPLEX_EXPECTED_TABLE "data/expected_values.json"
#endif

using json = nlohmann::ordered_json;
using namespace domcomplex;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3, kCycle = 4, kBudget = 5 };

struct Options {
    int n = 0;
    int k = -1;
    std::string mode = "gf2";
    bool stream = false;
    std::uint64_t budget = kDefaultCellBudget;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool json_out = false;
    std::string out;

    bool d52 = false;
    bool check_restriction = false;
    std::string export_matching;

    bool heavy = false;
    bool list = false;
    std::string table = DOMCOMPLEX_EXPECTED_TABLE;

    std::string path;
    std::string reexport;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Report {
public:
    explicit Report(std::string command)
    {
        j_["tool"] = "domcomplex";
        j_["schema_version"] = kSchemaVersion;
        j_["command"] = std::move(command);
    }

    void set_argv(int argc, char** argv)
    {
        j_["argv"] = std::vector<std::string>(argv + 1, argv + argc);
    }

    json& operator[](const char* key) { return j_[key]; }

    void check(const std::string& name, const json& expected, const json& actual, bool pass)
    {
        j_["checks"].push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
        if (!pass && exit_ == kOk)
            exit_ = kCheckFailed;
    }

    void check(const std::string& name, const json& expected, const json& actual)
    {
        check(name, expected, actual, expected == actual);
    }

    void cycle_found() { exit_ = kCycle; }
    int exit_code() const { return exit_; }

    json finish(double seconds)
    {
        if (!j_.contains("checks"))
            j_["checks"] = json::array();
        j_["pass"] = exit_ == kOk;
        j_["timing"] = {{"wall_time_s", seconds}};
        return j_;
    }

private:
    json j_;
    int exit_ = kOk;
};

// ---- helpers ----------------------------------------------------------------

std::string graph_text(EdgeMask m, int n) { return LabeledGraph(VertexCount(n), m).to_string(); }

json census_json(const MorseCensus& c, bool acyclic)
{
    json crit = json::object();
    for (std::size_t d = 0; d < c.critical.size(); ++d)
        crit[std::to_string(d)] = c.critical[d];
    return {{"critical", crit}, {"matched_pairs", c.matched_pairs}, {"acyclic", acyclic}};
}

json witness_json(const VPath& w, int n)
{
    json path = json::array();
    for (std::size_t i = 0; i < w.upper.size(); ++i) {
        path.push_back(graph_text(w.lower[i], n));
        path.push_back(graph_text(w.upper[i], n));
    }
    path.push_back(graph_text(w.lower.back(), n));
    return path;
}

std::int64_t wedge_count(std::int64_t n) { return (n - 2) * (n - 3) * (3 * n * n - 7 * n - 2) / 12; }

ComplexSpec make_spec(const Options& o)
{
    if (o.n < 2 || o.n > kMaxVertices)
        throw UsageError("--n must lie in [2, 16]");
    if (o.k < 0 || o.k > o.n)
        throw UsageError("--k must lie in [0, n]");
    return ComplexSpec(VertexCount(o.n), o.k);
}

EnumerateOptions enum_options(const Options& o) { return {o.budget, o.jobs}; }

HomologyMode parse_mode(const std::string& m)
{
    if (m == "gf2")
        return HomologyMode::gf2;
    if (m == "int")
        return HomologyMode::integer;
    throw UsageError("--mode must be gf2 or int");
}

// ---- stats -------------------------------------------------------------------

Report cmd_stats(const Options& o)
{
    Report r("stats");
    const auto spec = make_spec(o);
    r["spec"] = {{"n", o.n}, {"k", o.k}};
    json res;
    if (o.stream) {
        const auto f = count_cells(spec, o.jobs);
        res["dimension"] = f.dimension();
        res["f_vector"] = f.c;
        res["euler"] = f.euler();
        res["mode"] = "stream";
    } else {
        const auto t = enumerate(spec, enum_options(o));
        const auto s = complex_stats(t);
        res["dimension"] = s.dim;
        res["f_vector"] = s.f.c;
        res["euler"] = s.euler;
        json fc = json::object();
        for (const auto& [d, c] : s.facet_count_by_dim)
            fc[std::to_string(d)] = c;
        res["facets_by_dimension"] = fc;
        res["mode"] = "materialized";
    }
    if (o.k >= 2)
        res["vizing_dimension"] = vizing_dimension(o.n, o.k);
    r["results"] = res;
    if (o.k >= 2 && o.k <= o.n && res["dimension"].get<int>() >= 0)
        r.check("dimension equals Vizing bound", vizing_dimension(o.n, o.k), res["dimension"]);
    return r;
}

// ---- morse -------------------------------------------------------------------

void run_matching_checks(Report& r, const Matching& m, const CellTable& cells, const json& expected_census)
{
    const int n = cells.n().value();
    r.check("well-formed", true, is_well_formed(m, cells));
    const auto cyc = verify_acyclic(m, cells);
    const auto census = critical_census(m, cells);
    json res = census_json(census, cyc.acyclic);
    if (!cyc.acyclic && cyc.witness) {
        res["cycle_witness"] = witness_json(*cyc.witness, n);
        res["witness_valid"] = validate_witness(*cyc.witness, m, cells);
        r.cycle_found();
    }
    json crit2 = json::array();
    for (const auto c : census.critical_cells)
        if (popcount(c) - 1 == 2 && n <= 5)
            crit2.push_back(graph_text(c, n));
    if (!crit2.empty())
        res["critical_2cells"] = crit2;
    r["results"] = res;
    r.check("acyclic", true, cyc.acyclic);
    r.check("critical census", expected_census, json(census.critical));
}

Report cmd_morse(const Options& o)
{
    Report r("morse");
    if (o.d52) {
        r["spec"] = {{"n", d52::kN}, {"k", d52::kK}, {"matching", "P12+P34+R34"}};
        const auto dm = d52::build_matching();
        run_matching_checks(r, dm.full, dm.cells, json::array({1, 0, 0, 0, 0, 4, 0}));
        if (!o.export_matching.empty()) {
            std::ofstream f(o.export_matching);
            write_matching(f, dm.full, d52::kN);
            if (!f)
                throw std::ios_base::failure("cannot write " + o.export_matching);
        }
        return r;
    }
    if (o.n < 4 || o.n > kMaxVertices)
        throw UsageError("morse needs --n in [4, 16] or --d52");
    r["spec"] = {{"n", o.n}, {"k", o.n - 2}, {"matching", "P12+Q12+Q23"}};
    const auto dm = build_domination_matching(VertexCount(o.n), enum_options(o));
    const std::uint64_t nn = static_cast<std::uint64_t>(wedge_count(o.n));
    run_matching_checks(r, dm.full, dm.cells, json::array({1, 0, nn, 0}));
    if (o.check_restriction) {
        if (o.n < 5)
            throw UsageError("--check-restriction needs n >= 5");
        const auto small = build_domination_matching(VertexCount(o.n - 1), enum_options(o));
        const bool restricts = verify_restriction(dm.full, small.full, small.cells);
        const auto outside = q12_outside_embedding(dm, small.cells);
        r["results"]["restriction"] = {{"against", {{"n", o.n - 1}, {"k", o.n - 3}}},
                                       {"restricts", restricts},
                                       {"q12_outside_acyclic", outside.acyclic},
                                       {"q12_outside_max_path_length", outside.max_path_length}};
        r.check("restricts to n-1", true, restricts);
        r.check("no Q12 cycle outside the embedding", true, outside.acyclic);
        r.check("Q12 paths outside the embedding have length <= 2", 2, outside.max_path_length,
                outside.max_path_length <= 2);
    }
    if (!o.export_matching.empty()) {
        std::ofstream f(o.export_matching);
        write_matching(f, dm.full, o.n);
        if (!f)
            throw std::ios_base::failure("cannot write " + o.export_matching);
    }
    return r;
}

// ---- homology ----------------------------------------------------------------

Report cmd_homology(const Options& o)
{
    Report r("homology");
    const auto spec = make_spec(o);
    const auto mode = parse_mode(o.mode);
    r["spec"] = {{"n", o.n}, {"k", o.k}};
    const auto t = enumerate(spec, enum_options(o));
    HomologyOptions ho;
    ho.cell_budget = o.budget;
    ho.jobs = o.jobs;
    const auto b = betti(t, mode, ho);
    const auto chi = f_vector(t).euler();
    json res = {{"n", o.n}, {"k", o.k}, {"mode", to_string(mode)}, {"betti", b.b}, {"euler_check", b.euler() == chi}};
    if (mode == HomologyMode::integer) {
        json tor = json::object();
        for (std::size_t d = 0; d < b.torsion.size(); ++d)
            if (!b.torsion[d].empty())
                tor[std::to_string(d)] = b.torsion[d];
        res["torsion"] = tor;
    }
    r["results"] = res;
    r.check("alternating Betti sum equals Euler characteristic", chi, b.euler());
    return r;
}

// ---- reproduce ---------------------------------------------------------------

struct ReproduceContext {
    Options opt;
    std::map<int, DominationMatching> dnn2;
    std::optional<d52::D52Matching> d52;

    const DominationMatching& matching(int n)
    {
        auto it = dnn2.find(n);
        if (it == dnn2.end())
            it = dnn2.emplace(n, build_domination_matching(VertexCount(n), enum_options(opt))).first;
        return it->second;
    }

    const d52::D52Matching& d52m()
    {
        if (!d52)
            d52 = d52::build_matching();
        return *d52;
    }
};

json load_table(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::ios_base::failure("cannot open expected-value table " + path);
    json t;
    try {
        t = json::parse(f);
    } catch (const json::exception& e) {
        throw FormatError(std::string("bad expected-value table: ") + e.what());
    }
    if (t.value("format", "") != "domcomplex-expected" || !t.contains("rows"))
        throw FormatError("not a domcomplex expected-value table: " + path);
    if (t.value("version", 0) != 1)
        throw VersionError("unsupported expected-value table version " + t["version"].dump());
    return t;
}

// Computes the actual value for one table row.  Returns {actual, pass}.
std::pair<json, bool> run_row(const json& row, ReproduceContext& ctx)
{
    const std::string kind = row.at("kind");
    const json& expected = row.at("expected");
    if (kind == "f_vector" || kind == "euler") {
        const auto f = count_cells(ComplexSpec(VertexCount(row.at("n").get<int>()), row.at("k").get<int>()),
                                   ctx.opt.jobs);
        json actual = kind == "euler" ? json(f.euler()) : json(f.c);
        return {actual, actual == expected};
    }
    if (kind == "census") {
        const auto& dm = ctx.matching(row.at("n").get<int>());
        const auto census = critical_census(dm.full, dm.cells);
        const bool acyclic = verify_acyclic(dm.full, dm.cells).acyclic;
        const bool wf = is_well_formed(dm.full, dm.cells);
        json actual = census.critical;
        return {actual, actual == expected && acyclic && wf};
    }
    if (kind == "hasse") {
        const int n = row.at("n").get<int>();
        const auto& dm = ctx.matching(n);
        std::set<std::pair<std::string, std::string>> pairs;
        for (const auto* part : {&dm.q12, &dm.q23})
            for (const auto& p : part->pairs())
                pairs.emplace(graph_text(p.lower, n), graph_text(p.upper, n));
        std::set<std::string> crit;
        for (const auto c : critical_census(dm.full, dm.cells).critical_cells)
            if (popcount(c) == 3)
                crit.insert(graph_text(c, n));
        json jp = json::array();
        for (const auto& [a, b] : pairs)
            jp.push_back({a, b});
        json actual = {{"pairs", jp}, {"critical_2cells", crit}};
        std::set<std::pair<std::string, std::string>> want_pairs;
        for (const auto& p : expected.at("pairs"))
            want_pairs.emplace(p[0].get<std::string>(), p[1].get<std::string>());
        const auto want_crit = expected.at("critical_2cells").get<std::set<std::string>>();
        return {actual, pairs == want_pairs && crit == want_crit};
    }
    if (kind == "restriction") {
        const int n = row.at("n").get<int>();
        const auto& big = ctx.matching(n);
        const auto& small = ctx.matching(n - 1);
        const bool restricts = verify_restriction(big.full, small.full, small.cells);
        const auto outside = q12_outside_embedding(big, small.cells);
        json actual = {{"restricts", restricts}, {"max_path_length", outside.max_path_length}};
        return {actual, restricts == expected.at("restricts").get<bool>() && outside.acyclic &&
                            outside.max_path_length <= expected.at("max_path_length").get<std::size_t>()};
    }
    if (kind == "d52_tables") {
        const auto& dm = ctx.d52m();
        const CellSet r12 = to_cell_set(dm.split12.r);
        CellSet seen;
        bool ok = true;
        for (const auto& fc : d52::r12_contributions()) {
            const EdgeMask facet = d52::cell(fc.facet);
            CellSet computed, listed;
            for (EdgeMask sub = facet; sub != 0; sub = (sub - 1) & facet)
                if (r12.count(sub) && !seen.count(sub))
                    computed.insert(sub);
            for (const auto c : fc.cells)
                listed.insert(d52::cell(c));
            ok = ok && computed == listed;
            seen.insert(listed.begin(), listed.end());
        }
        ok = ok && seen == r12;
        return {json(r12.size()), ok && json(r12.size()) == expected};
    }
    if (kind == "r34_profile") {
        const auto fam = CellTable::from_cells(VertexCount(5), ctx.d52m().r34);
        json actual = {fam.cells(4).size(), fam.cells(5).size(), fam.cells(6).size()};
        return {actual, actual == expected};
    }
    if (kind == "d52_census") {
        const auto& dm = ctx.d52m();
        json actual = critical_census(dm.full, dm.cells).critical;
        return {actual, actual == expected && verify_acyclic(dm.full, dm.cells).acyclic};
    }
    if (kind == "r34_pairings") {
        const auto fam = CellTable::from_cells(VertexCount(5), ctx.d52m().r34);
        const auto result = enumerate_complete_matchings(fam);
        const auto fig = d52::default_r34_matching();
        const bool has_fig = std::find(result.acyclic.begin(), result.acyclic.end(), fig) != result.acyclic.end();
        json actual = result.acyclic.size();
        return {actual, actual == expected && has_fig};
    }
    if (kind == "betti") {
        const auto t = enumerate(ComplexSpec(VertexCount(row.at("n").get<int>()), row.at("k").get<int>()),
                                 enum_options(ctx.opt));
        HomologyOptions ho;
        ho.cell_budget = ctx.opt.budget;
        const auto b = betti(t, parse_mode(row.at("mode")), ho);
        json actual = b.b;
        return {actual, actual == expected && !b.has_torsion()};
    }
    throw FormatError("unknown row kind '" + kind + "'");
}

std::string row_label(const json& row)
{
    std::ostringstream os;
    os << row.at("kind").get<std::string>();
    for (const char* key : {"n", "k", "mode"})
        if (row.contains(key))
            os << ' ' << key << '=' << (row[key].is_string() ? row[key].get<std::string>() : row[key].dump());
    return os.str();
}

Report cmd_reproduce(const Options& o)
{
    Report r("reproduce");
    const json table = load_table(o.table);
    r["spec"] = {{"table_version", table["version"]}, {"heavy", o.heavy}};
    ReproduceContext ctx{o, {}, {}};
    json rows = json::array();
    for (const auto& row : table["rows"]) {
        const bool heavy = row.value("heavy", false);
        json entry = {{"id", row.at("id")}, {"criterion", row.at("criterion")}, {"label", row_label(row)},
                      {"expected", row.at("expected")}, {"heavy", heavy}};
        if (o.list) {
            rows.push_back(entry);
            continue;
        }
        if (heavy && !o.heavy)
            continue;
        const auto [actual, pass] = run_row(row, ctx);
        r.check(row.at("id").get<std::string>() + " " + row_label(row), row.at("expected"), actual, pass);
    }
    if (o.list)
        r["results"] = {{"rows", rows}};
    return r;
}

// ---- export / import ---------------------------------------------------------

Report cmd_export(const Options& o)
{
    Report r("export");
    const auto spec = make_spec(o);
    r["spec"] = {{"n", o.n}, {"k", o.k}};
    const auto t = enumerate(spec, enum_options(o));
    std::ofstream f(o.path, std::ios::binary);
    if (!f)
        throw std::ios_base::failure("cannot write " + o.path);
    write_cache(f, t);
    f.close();
    if (!f)
        throw std::ios_base::failure("write failed for " + o.path);
    r["results"] = {{"path", o.path}, {"cells", t.size()}, {"f_vector", f_vector(t).c}};
    return r;
}

Report cmd_import(const Options& o)
{
    Report r("import");
    std::ifstream f(o.path, std::ios::binary);
    if (!f)
        throw std::ios_base::failure("cannot open " + o.path);
    std::stringstream raw;
    raw << f.rdbuf();
    const std::string original = raw.str();
    std::istringstream in(original);
    const auto t = read_cache(in);
    r["spec"] = {{"n", t.n().value()}, {"k", t.k()}};
    std::ostringstream again;
    write_cache(again, t);
    r["results"] = {{"path", o.path}, {"cells", t.size()}, {"f_vector", f_vector(t).c}};
    r.check("re-export is byte-identical", true, again.str() == original);
    if (!o.reexport.empty()) {
        std::ofstream g(o.reexport, std::ios::binary);
        g << again.str();
        if (!g)
            throw std::ios_base::failure("cannot write " + o.reexport);
    }
    return r;
}

// ---- rendering ---------------------------------------------------------------

void render_value(std::ostream& os, const json& v, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, val] : v.items()) {
        if (val.is_object() && !val.empty()) {
            os << pad << key << ":\n";
            render_value(os, val, indent + 2);
        } else {
            os << pad << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << '\n';
        }
    }
}

void render_human(std::ostream& os, const json& rep)
{
    os << "command: " << rep["command"].get<std::string>() << '\n';
    if (rep.contains("spec")) {
        os << "spec:\n";
        render_value(os, rep["spec"], 2);
    }
    if (rep.contains("results")) {
        if (rep["results"].contains("rows")) {
            for (const auto& row : rep["results"]["rows"])
                os << "  " << row["id"].get<std::string>() << "  [" << row["label"].get<std::string>() << "]"
                   << (row["heavy"].get<bool>() ? " heavy" : "") << "  expected " << row["expected"].dump() << '\n';
        } else {
            os << "results:\n";
            render_value(os, rep["results"], 2);
        }
    }
    for (const auto& c : rep["checks"])
        os << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>()
           << "  expected " << c["expected"].dump() << "  actual " << c["actual"].dump() << '\n';
    os << "result: " << (rep["pass"].get<bool>() ? "PASS" : "FAIL") << "  ("
       << rep["timing"]["wall_time_s"].get<double>() << " s)\n";
}

void emit(const Options& o, const json& rep)
{
    std::ostringstream os;
    if (o.json_out)
        os << rep.dump(2) << '\n';
    else
        render_human(os, rep);
    if (o.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(o.out);
        f << os.str();
        if (!f)
            throw std::ios_base::failure("cannot write report to " + o.out);
    }
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Domination complexes D_{n,k}: enumeration, Morse matchings, homology"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "cell budget for materialized complexes")
            ->envname("DOMCOMPLEX_BUDGET");
        sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--json", o.json_out, "machine-readable report");
        sub->add_option("--out", o.out, "write the report to this file");
    };

    auto* stats = app.add_subcommand("stats", "dimension, f-vector and Euler characteristic of D_{n,k}");
    stats->add_option("--n", o.n, "number of vertices")->required();
    stats->add_option("--k", o.k, "domination threshold")->required();
    stats->add_flag("--stream", o.stream, "count cells without materializing them");
    common(stats);

    auto* morse = app.add_subcommand("morse", "build and verify the Morse matching on D_{n,n-2} or D_{5,2}");
    auto* morse_n = morse->add_option("--n", o.n, "number of vertices (k = n-2)");
    auto* morse_d52 = morse->add_flag("--d52", o.d52, "use the D_{5,2} matching");
    morse_n->excludes(morse_d52);
    morse->add_flag("--check-restriction", o.check_restriction, "also compare against the n-1 matching");
    morse->add_option("--export-matching", o.export_matching, "write the matched pairs to this file");
    common(morse);

    auto* homology = app.add_subcommand("homology", "Betti numbers of D_{n,k}");
    homology->add_option("--n", o.n, "number of vertices")->required();
    homology->add_option("--k", o.k, "domination threshold")->required();
    homology->add_option("--mode", o.mode, "gf2 or int")->check(CLI::IsMember({"gf2", "int"}));
    common(homology);

    auto* reproduce = app.add_subcommand("reproduce", "replay the expected-value table");
    reproduce->add_flag("--heavy", o.heavy, "include the slow rows");
    reproduce->add_flag("--list", o.list, "list rows without running them");
    reproduce->add_option("--table", o.table, "expected-value table (JSON)");
    common(reproduce);

    auto* exp = app.add_subcommand("export", "write D_{n,k} to a cache file");
    exp->add_option("path", o.path, "cache file")->required();
    exp->add_option("--n", o.n, "number of vertices")->required();
    exp->add_option("--k", o.k, "domination threshold")->required();
    common(exp);

    auto* imp = app.add_subcommand("import", "load and validate a cache file");
    imp->add_option("path", o.path, "cache file")->required();
    imp->add_option("--reexport", o.reexport, "write the re-serialized table here");
    common(imp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Report r = stats->parsed()       ? cmd_stats(o)
                   : morse->parsed()     ? cmd_morse(o)
                   : homology->parsed()  ? cmd_homology(o)
                   : reproduce->parsed() ? cmd_reproduce(o)
                   : exp->parsed()       ? cmd_export(o)
                                         : cmd_import(o);
        r.set_argv(argc, argv);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        emit(o, r.finish(secs));
        return r.exit_code();
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n(raise --budget / DOMCOMPLEX_BUDGET, or use stats --stream)\n";
        return kBudget;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvalidVertexCount& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const UnsupportedSpec& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
