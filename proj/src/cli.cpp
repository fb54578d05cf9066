#include "fpg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "fpg/engine.hpp"
#include "fpg/homology.hpp"
#include "fpg/lst.hpp"

namespace fpg {

const std::vector<ClassifyRow>& reference_classify_rows() {
    static const std::vector<ClassifyRow> rows = {
        {3, 4, 2, 2, 1, 1, 1},
        {4, 10, 4, 6, 3, 3, 2},
        {5, 28, 12, 16, 8, 10, 4},
        {6, 97, 39, 58, 29, 36, 12},
        {7, 359, 138, 221, 109, 137, 40},
        {8, 1635, 638, 997, 497, 608, 155},
        {9, 8296, 3366, 4930, 2479, 2976, 685},
        {10, 48432, 20751, 27681, 14101, 16568, 3396},
        {11, 316520, 143829, 172691, 88662, 102498, 18974},
    };
    return rows;
}

namespace {

struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainFailure("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows, bool pretty) {
    if (!pretty) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
            out << '\n';
        }
        return;
    }
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += std::string(width[i] - row[i].size(), ' ') + row[i];
        }
        out << line << '\n';
    }
}

std::vector<std::string> classify_cells(const ClassifyRow& r) {
    return {std::to_string(r.n),      std::to_string(r.total),  std::to_string(r.none),  std::to_string(r.some),
            std::to_string(r.triple), std::to_string(r.broken), std::to_string(r.handle)};
}

const std::vector<std::string> kClassifyHeader = {"n", "total", "none", "some", "triple", "broken", "handle"};

int cmd_graphs(std::ostream& out, int n, int max_n, bool classify, bool pretty) {
    if (max_n < n) max_n = n;
    if (classify) {
        std::vector<std::vector<std::string>> rows = {kClassifyHeader};
        for (int k = n; k <= max_n; ++k) rows.push_back(classify_cells(classify_graphs(k)));
        print_table(out, rows, pretty);
        return 0;
    }
    for (int k = n; k <= max_n; ++k) {
        std::vector<std::vector<std::string>> rows;
        if (pretty) rows.push_back({"code", "triple", "broken", "handle", "chains"});
        for (const MultiGraph& g : enumerate_face_pairing_graphs(k)) {
            PatternReport p = analyze_patterns(g);
            rows.push_back({canonical_form(g).hex(), p.triple ? "1" : "0", p.broken_rejected ? "1" : "0",
                            p.handle ? "1" : "0", std::to_string(p.one_ended_chains.size())});
        }
        print_table(out, rows, pretty);
    }
    return 0;
}

struct CensusOptions {
    int n = 1;
    bool orientable = false;
    std::string mode = "redesigned";
    bool no_graph_filters = false;
    std::vector<std::string> disabled;
    int workers = 1;
    std::string stats_file;
    bool timing = false;
};

CensusConfig make_config(const CensusOptions& o) {
    CensusConfig cfg;
    cfg.n = o.n;
    cfg.orientable_only = o.orientable;
    cfg.mode = parse_mode(o.mode);
    if (o.no_graph_filters) cfg.graph_filters = GraphFilterSet::none();
    for (const auto& name : o.disabled) {
        if (name == "all") {
            cfg.tri_filters = FilterSet::none();
            continue;
        }
        auto tag = tag_from_name(name);
        if (!tag) throw CLI::ValidationError("--disable-filter", "unknown filter tag '" + name + "'");
        cfg.tri_filters.set(*tag, false);
    }
    cfg.worker_count = o.workers;
    return cfg;
}

int cmd_census(std::ostream& out, std::ostream& err, const CensusOptions& o, bool pretty) {
    CensusResult r = run_census(make_config(o));
    std::vector<std::vector<std::string>> rows;
    if (pretty) rows.push_back({"graph", "signature"});
    for (const auto& c : r.candidates) {
        if (pretty) rows.push_back({c.graph.hex(), c.signature});
        else rows.push_back({c.signature});
    }
    print_table(out, rows, pretty);
    std::string stats = r.stats.str(o.timing);
    if (o.stats_file.empty()) {
        err << stats;
    } else {
        std::ofstream f(o.stats_file);
        if (!f || !(f << stats)) throw DomainFailure("cannot write '" + o.stats_file + "'");
    }
    return 0;
}

int cmd_lst(std::ostream& out, int t, bool pretty) {
    std::vector<std::vector<std::string>> rows = {{"base", "layers", "boundary_edges", "signature"}};
    auto lsts = enumerate_lsts(t);
    for (const auto& [d, tri] : lsts) {
        std::string layers;
        for (int b : d.layer_choices) layers += static_cast<char>('0' + b);
        if (layers.empty()) layers = "-";
        std::string edges = std::to_string(d.boundary_edges[0]) + "," + std::to_string(d.boundary_edges[1]) + "," +
                            std::to_string(d.boundary_edges[2]);
        rows.push_back({std::to_string(d.base_choice), layers, edges, iso_signature(tri)});
    }
    print_table(out, rows, pretty);
    out << "# sequences " << lsts.size() << ", distinct signatures " << count_distinct_lst_signatures(lsts) << '\n';
    return 0;
}

int cmd_analyze(std::ostream& out, const std::string& path, const std::string& builtin_name) {
    Triangulation t;
    if (!builtin_name.empty()) {
        try {
            t = builtin(builtin_name);
        } catch (const std::invalid_argument& e) {
            throw DomainFailure(e.what());
        }
    } else {
        t = parse_tri(read_file(path));
    }
    Skeleton s(t);
    out << "tetrahedra: " << t.size() << '\n'
        << "glued_faces: " << t.glued_slot_count() << '\n'
        << "vertices: " << s.vertex_count() << '\n'
        << "edges: " << s.edge_count() << '\n'
        << "faces: " << s.face_count() << '\n';
    std::vector<int> degrees;
    for (const auto& e : s.edges()) degrees.push_back(e.degree);
    std::sort(degrees.begin(), degrees.end());
    out << "edge_degrees:";
    for (int d : degrees) out << ' ' << d;
    out << '\n' << "valid: " << (s.valid() ? "yes" : "no") << '\n';
    if (s.valid()) {
        for (const auto& l : vertex_links(t, s))
            out << "link " << l.vertex << ": euler " << l.euler << ", boundary " << l.boundary_circles << ", "
                << (l.orientable ? "orientable" : "non-orientable") << '\n';
    }
    const bool closed = is_closed_3manifold(t);
    out << "closed_manifold: " << (closed ? "yes" : "no") << '\n';
    out << "orientable: " << (has_consistent_orientation(t) ? "yes" : "no") << '\n';
    out << "euler_characteristic: " << euler_characteristic(t) << '\n';
    out << "homology: " << (closed ? first_homology(t).str() : std::string("n/a")) << '\n';
    out << "signature: " << (t.size() && is_connected(t) ? iso_signature(t) : std::string("n/a")) << '\n';
    out << "face_pairing_graph:\n" << serialize_graph(face_pairing_graph_of(t));
    return 0;
}

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

std::vector<Check> run_verify(int max_n) {
    std::vector<Check> checks;
    for (const ClassifyRow& ref : reference_classify_rows()) {
        if (ref.n > max_n) break;
        ClassifyRow got = classify_graphs(ref.n);
        std::ostringstream d;
        for (const auto& c : classify_cells(got)) d << c << ' ';
        checks.push_back({"frequency table n=" + std::to_string(ref.n), got == ref, d.str()});
    }

    TripleEdgeReport tr = triple_edge_report();
    checks.push_back({"triple edge theorem", tr.ok(), std::to_string(tr.flagged) + " of 216 matchings flagged"});

    DoubleEdgeClasses dc = classify_double_edge_configurations();
    int orientable = static_cast<int>(std::count(dc.class_orientable.begin(), dc.class_orientable.end(), true));
    checks.push_back({"double edge classes", dc.class_signatures.size() == 3 && orientable == 2,
                      std::to_string(dc.survivors.size()) + " configurations, " +
                          std::to_string(dc.class_signatures.size()) + " classes, " + std::to_string(orientable) +
                          " orientable"});

    bool lst_ok = true;
    std::string lst_detail;
    for (int t = 1; t <= 8; ++t) {
        auto n = enumerate_lsts(t).size();
        lst_ok = lst_ok && n == (std::size_t{1} << t);
        lst_detail += std::to_string(n) + ' ';
    }
    checks.push_back({"layered solid torus counts", lst_ok, lst_detail});

    const std::map<std::string, std::string> expected = {
        {"S3_1", "0"}, {"RP3_2", "Z_2"}, {"L31_2", "Z_3"}, {"S2xS1_2", "Z"}};
    bool h_ok = true;
    std::string h_detail;
    for (const auto& [name, h] : expected) {
        Triangulation t = builtin(name);
        std::string got = first_homology(t).str();
        h_ok = h_ok && got == h && is_closed_3manifold(t) && is_orientable(t);
        h_detail += name + "=" + got + ' ';
    }
    checks.push_back({"builtin homology", h_ok, h_detail});

    bool eq = true;
    std::string eq_detail;
    for (int n = 1; n <= std::min(3, max_n); ++n)
        for (bool orient : {false, true}) {
            CensusConfig cfg;
            cfg.n = n;
            cfg.orientable_only = orient;
            cfg.mode = SearchMode::baseline;
            auto base = run_census(cfg);
            cfg.mode = SearchMode::redesigned;
            auto red = run_census(cfg);
            eq = eq && base.signatures() == red.signatures() &&
                 red.stats.nodes_explored <= base.stats.nodes_explored;
            eq_detail += std::to_string(red.candidates.size()) + ' ';
        }
    checks.push_back({"mode equivalence", eq, eq_detail});
    return checks;
}

int cmd_verify(std::ostream& out, int max_n) {
    bool all = true;
    for (const Check& c : run_verify(max_n)) {
        out << (c.ok ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
        all = all && c.ok;
    }
    out << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Face pairing graph census tools", "fpg"};
    app.require_subcommand(1);
    std::string format = "tsv";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "pretty"}));
    };

    int graphs_n = 3, graphs_max = 0;
    bool classify = false;
    auto* graphs = app.add_subcommand("graphs", "Enumerate or classify face pairing graphs");
    graphs->add_option("-n,--tets", graphs_n, "Number of vertices")->required()->check(CLI::Range(1, 12));
    graphs->add_option("--max-n", graphs_max, "Last size of a range starting at -n")->check(CLI::Range(1, 12));
    graphs->add_flag("--classify", classify, "Print the frequency table of undesirable structures");
    add_format(graphs);

    CensusOptions census_opts;
    auto* census = app.add_subcommand("census", "Run the gluing search");
    census->add_option("-n,--tets", census_opts.n, "Number of tetrahedra")->required()->check(CLI::Range(1, 8));
    census->add_flag("--orientable", census_opts.orientable, "Orientable triangulations only");
    census->add_option("--mode", census_opts.mode, "Search mode")->check(CLI::IsMember({"baseline", "redesigned"}));
    census->add_flag("--no-graph-filters", census_opts.no_graph_filters, "Keep graphs with undesirable structures");
    census->add_option("--disable-filter", census_opts.disabled, "Disable a pruning filter by tag (repeatable, or 'all')");
    census->add_option("--workers", census_opts.workers, "Worker threads")->check(CLI::Range(1, 256));
    census->add_option("--stats-file", census_opts.stats_file, "Write statistics here instead of standard error");
    census->add_flag("--timing", census_opts.timing, "Include wall-clock time in the statistics");
    add_format(census);

    int lst_t = 1;
    auto* lst = app.add_subcommand("lst", "List standard layered solid tori");
    lst->add_option("-t,--tets", lst_t, "Number of tetrahedra")->required()->check(CLI::Range(1, 12));
    add_format(lst);

    std::string tri_path, builtin_name;
    auto* analyze = app.add_subcommand("analyze", "Describe a triangulation");
    auto* path_opt = analyze->add_option("file", tri_path, "Triangulation in .tri form");
    auto* builtin_opt =
        analyze->add_option("--builtin", builtin_name, "Analyze a built-in triangulation instead")
            ->check(CLI::IsMember(builtin_names()));
    path_opt->excludes(builtin_opt);
    analyze->require_option(1);

    int verify_max = 9;
    auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
    verify->add_option("--max-n", verify_max, "Largest graph size for the frequency table")->check(CLI::Range(3, 11));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "fpg: " << e.what() << '\n';
        return 2;
    }

    const bool pretty = format == "pretty";
    try {
        if (graphs->parsed()) return cmd_graphs(out, graphs_n, graphs_max, classify, pretty);
        if (census->parsed()) return cmd_census(out, err, census_opts, pretty);
        if (lst->parsed()) return cmd_lst(out, lst_t, pretty);
        if (analyze->parsed()) return cmd_analyze(out, tri_path, builtin_name);
        if (verify->parsed()) return cmd_verify(out, verify_max);
    } catch (const CLI::ValidationError& e) {
        err << "fpg: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "fpg: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace fpg
