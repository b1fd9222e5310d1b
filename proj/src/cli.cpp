#include "phcurv/cli.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <boost/random/uniform_int_distribution.hpp>

#include "CLI11.hpp"
#include "phcurv/complex.hpp"
#include "phcurv/curvature.hpp"
#include "phcurv/experiments.hpp"
#include "phcurv/geometric.hpp"
#include "phcurv/io.hpp"
#include "phcurv/morse2d.hpp"
#include "phcurv/orientation.hpp"
#include "phcurv/parallel.hpp"
#include "phcurv/rng.hpp"

namespace phcurv::cli {

using json = nlohmann::ordered_json;
using phcurv::to_string;

namespace {

constexpr std::uint64_t kDefaultSamples = 10'000;

const std::pair<const char*, Command> kCommands[] = {
    {"chi", Command::chi},
    {"fvector", Command::fvector},
    {"index", Command::index},
    {"verify", Command::verify},
    {"curvature", Command::curvature},
    {"classify", Command::classify},
    {"sample", Command::sample},
    {"epsgraph", Command::epsgraph},
    {"embed-curv", Command::embed_curv},
    {"experiment", Command::experiment},
};

bool has_table(Command c)
{
    return c != Command::chi && c != Command::fvector && c != Command::verify && c != Command::epsgraph;
}

bool is_seeded(Command c)
{
    return c == Command::verify || c == Command::curvature || c == Command::embed_curv || c == Command::experiment;
}

std::string fmt(double x)
{
    if (std::isnan(x))
        return "";
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, end) : std::string();
}

json rational_json(const Rational& q) { return json{{"exact", to_string(q)}, {"decimal", to_double(q)}}; }

json big_array(const std::vector<BigInt>& xs)
{
    json a = json::array();
    for (const BigInt& x : xs)
        a.push_back(to_string(x));
    return a;
}

json graph_json(const io::LoadedGraph& lg)
{
    return json{{"source", lg.source}, {"vertices", lg.graph.vertex_count()}, {"edges", lg.graph.edge_count()}};
}

ComplexOptions complex_options(const RunConfig& cfg, bool allow_cap)
{
    ComplexOptions o;
    if (allow_cap)
        o.max_dim = cfg.max_dim;
    o.budget = cfg.budget;
    o.threads = cfg.threads;
    return o;
}

json config_echo(const RunConfig& cfg)
{
    json c;
    const auto put = [&c](const char* key, const std::string& v) {
        if (!v.empty())
            c[key] = v;
    };
    put("graph", cfg.graph);
    put("coloring", cfg.coloring);
    put("arcs", cfg.arcs);
    put("measure", cfg.measure);
    put("cloud", cfg.cloud);
    put("shape", cfg.shape);
    put("experiment", cfg.experiment);
    if (is_seeded(cfg.command))
        c["seed"] = cfg.seed;
    if (cfg.command == Command::curvature)
        c["mode"] = cfg.mc ? "monte_carlo" : "exact";
    if (cfg.samples)
        c["samples"] = *cfg.samples;
    if (cfg.command == Command::experiment) {
        c["n"] = cfg.n;
        c["p"] = cfg.p;
        c["trials"] = cfg.trials;
    }
    if (cfg.command == Command::verify)
        c["instances"] = cfg.instances;
    if (cfg.epsilon)
        c["epsilon"] = *cfg.epsilon;
    if (cfg.max_dim)
        c["max_dim"] = *cfg.max_dim;
    c["budget"] = cfg.budget;
    return c;
}

Orientation load_orientation(const RunConfig& cfg, const Graph& g, std::string& how)
{
    Orientation o;
    if (!cfg.arcs.empty()) {
        how = "arcs";
        o = io::parse_orientation_json(io::read_file(cfg.arcs), g);
    } else {
        const bool from_file = !cfg.coloring.empty();
        how = from_file ? "coloring" : "identity";
        const Coloring c = from_file ? io::parse_coloring_json(io::read_file(cfg.coloring), g.vertex_count())
                                     : Coloring::identity(g.vertex_count());
        o = orient_by_coloring(g, c);
    }
    if (auto t = o.cyclic_witness())
        throw NotIrrotational(*t);
    return o;
}

Coloring random_coloring(std::size_t n, CounterRng& rng)
{
    const std::vector<Vertex> order = random_permutation(n, rng);
    std::vector<double> values(n);
    for (std::size_t r = 0; r < n; ++r)
        values[order[r]] = static_cast<double>(r);
    return Coloring(std::move(values));
}

std::vector<std::string> coordinate_columns(std::size_t dim)
{
    if (dim <= 3) {
        const char* names[] = {"x", "y", "z"};
        return {names, names + dim};
    }
    std::vector<std::string> cols;
    for (std::size_t i = 0; i < dim; ++i)
        cols.push_back("x" + std::to_string(i));
    return cols;
}

/// Rows (vertex, [coords], value, stderr, exact) for a curvature vector.
Table curvature_table(const CurvatureVector& k, const geometric::PointCloud* pc)
{
    Table t;
    t.columns = {"vertex"};
    if (pc != nullptr)
        for (auto& c : coordinate_columns(pc->dim()))
            t.columns.push_back(c);
    for (const char* c : {"value", "stderr", "exact"})
        t.columns.emplace_back(c);
    for (std::size_t v = 0; v < k.size(); ++v) {
        std::vector<std::string> row = {std::to_string(v)};
        if (pc != nullptr)
            for (double x : pc->point(v))
                row.push_back(fmt(x));
        if (k.mode == CurvatureVector::Mode::exact) {
            row.push_back(fmt(to_double(k.exact[v])));
            row.emplace_back("0");
            row.push_back(to_string(k.exact[v]));
        } else {
            row.push_back(fmt(k.estimate[v]));
            row.push_back(fmt(k.standard_error[v]));
            row.emplace_back();
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

json curvature_values(const CurvatureVector& k)
{
    json a = json::array();
    for (std::size_t v = 0; v < k.size(); ++v) {
        if (k.mode == CurvatureVector::Mode::exact)
            a.push_back(json{{"vertex", v}, {"exact", to_string(k.exact[v])}, {"decimal", to_double(k.exact[v])}});
        else
            a.push_back(json{{"vertex", v}, {"estimate", k.estimate[v]}, {"standard_error", k.standard_error[v]}});
    }
    return a;
}

geometric::PointCloud load_cloud(const RunConfig& cfg)
{
    return cfg.cloud.empty() ? io::sample_shape(cfg.shape) : io::load_point_cloud(cfg.cloud);
}

struct EpsChoice {
    double epsilon;
    double spacing;
    std::string source;
};

EpsChoice choose_epsilon(const RunConfig& cfg, const geometric::PointCloud& pc)
{
    const double spacing = pc.size() >= 2 ? geometric::nearest_neighbor_spacing(pc) : 0.0;
    if (cfg.epsilon)
        return {*cfg.epsilon, spacing, "flag"};
    if (pc.size() < 2)
        throw io::InputError("a default epsilon needs at least two points; pass --epsilon");
    return {1.5 * spacing, spacing, "1.5 x nearest-neighbour spacing"};
}

Report run_chi(const RunConfig& cfg)
{
    const io::LoadedGraph lg = io::load_graph(cfg.graph);
    const FVector f = count_simplices(lg.graph, complex_options(cfg, false));
    Report r;
    r.doc["results"] = json{{"graph", graph_json(lg)},
                            {"chi", to_string(euler_characteristic(f))},
                            {"f_vector", big_array(f.counts)},
                            {"dimension", f.dim()}};
    return r;
}

Report run_fvector(const RunConfig& cfg)
{
    const io::LoadedGraph lg = io::load_graph(cfg.graph);
    const FVector f = count_simplices(lg.graph, complex_options(cfg, true));
    Report r;
    json res{{"graph", graph_json(lg)}, {"f_vector", big_array(f.counts)}, {"dimension", f.dim()}, {"truncated", f.truncated}};
    res["chi"] = f.truncated ? json(nullptr) : json(to_string(euler_characteristic(f)));
    res["f_function"] = f.truncated ? json(nullptr) : json(f_function(f).to_string());
    r.doc["results"] = std::move(res);
    return r;
}

Report run_index(const RunConfig& cfg)
{
    const io::LoadedGraph lg = io::load_graph(cfg.graph);
    std::string how;
    const Orientation o = load_orientation(cfg, lg.graph, how);
    const PoincareHopfReport ph = verify_poincare_hopf(lg.graph, o, complex_options(cfg, false));
    Report r;
    r.doc["results"] = json{{"graph", graph_json(lg)},
                            {"orientation", how},
                            {"indices", ph.indices.values},
                            {"sum", to_string(ph.indices.total())},
                            {"chi", to_string(ph.chi)}};
    r.doc["verification"] = json{{"poincare_hopf", ph.passed}};
    r.passed = ph.passed;
    r.table.columns = {"vertex", "value", "stderr", "exact"};
    for (std::size_t v = 0; v < ph.indices.values.size(); ++v) {
        const std::string i = std::to_string(ph.indices.values[v]);
        r.table.rows.push_back({std::to_string(v), i, "0", i});
    }
    return r;
}

struct SuiteTally {
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    json first_failure = nullptr;

    void record(bool ok, const json& where)
    {
        ++instances;
        if (!ok && failures++ == 0)
            first_failure = where;
    }
    json to_json() const
    {
        return json{{"instances", instances}, {"failures", failures}, {"first_failure", first_failure}};
    }
};

Report run_verify(const RunConfig& cfg)
{
    const ComplexOptions opts = complex_options(cfg, false);
    SuiteTally ph, fid, fgb, gb;
    const auto check_coloring = [&](const Graph& g, const Coloring& c, const json& where) {
        const Orientation o = orient_by_coloring(g, c);
        ph.record(verify_poincare_hopf(g, o, opts).passed, where);
        fid.record(verify_f_identity(g, o, opts).passed, where);
    };
    const auto check_graph = [&](const Graph& g, const json& where) {
        fgb.record(verify_functional_gauss_bonnet(g, opts).passed, where);
        gb.record(verify_gauss_bonnet(exact_curvature(g, opts), g, opts).passed, where);
    };

    json scope;
    if (!cfg.graph.empty()) {
        const io::LoadedGraph lg = io::load_graph(cfg.graph);
        const std::size_t n = lg.graph.vertex_count();
        scope = json{{"graph", graph_json(lg)}};
        if (!cfg.coloring.empty())
            check_coloring(lg.graph, io::parse_coloring_json(io::read_file(cfg.coloring), n), json{{"coloring", cfg.coloring}});
        for (std::uint64_t i = 0; i < cfg.instances; ++i) {
            CounterRng rng(cfg.seed, i);
            check_coloring(lg.graph, random_coloring(n, rng), json{{"instance", i}});
        }
        check_graph(lg.graph, json{{"graph", lg.source}});
    } else {
        // Random graphs with n <= 12 and p in {0.3, 0.5, 0.8}, one random coloring each.
        scope = json{{"random_graphs", cfg.instances}, {"max_vertices", 12}, {"densities", {0.3, 0.5, 0.8}}};
        const double densities[] = {0.3, 0.5, 0.8};
        for (std::uint64_t i = 0; i < cfg.instances; ++i) {
            CounterRng rng(cfg.seed, i);
            const auto n = boost::random::uniform_int_distribution<std::size_t>(1, 12)(rng);
            const Graph g = experiments::random_er_digraph(n, densities[i % 3], rng).graph;
            const json where{{"instance", i}, {"vertices", n}, {"edges", g.edge_count()}};
            check_coloring(g, random_coloring(n, rng), where);
            check_graph(g, where);
        }
    }
    Report r;
    r.doc["results"] = json{{"scope", scope},
                            {"suites",
                             {{"poincare_hopf", ph.to_json()},
                              {"f_identity", fid.to_json()},
                              {"functional_gauss_bonnet", fgb.to_json()},
                              {"gauss_bonnet", gb.to_json()}}}};
    r.doc["verification"] = json{{"poincare_hopf", ph.failures == 0},
                                 {"f_identity", fid.failures == 0},
                                 {"functional_gauss_bonnet", fgb.failures == 0},
                                 {"gauss_bonnet", gb.failures == 0}};
    r.passed = ph.failures + fid.failures + fgb.failures + gb.failures == 0;
    return r;
}

Report run_curvature(const RunConfig& cfg)
{
    const io::LoadedGraph lg = io::load_graph(cfg.graph);
    const Graph& g = lg.graph;
    const ComplexOptions opts = complex_options(cfg, false);
    ColoringMeasure measure = UniformOrder{};
    if (!cfg.measure.empty())
        measure = io::parse_measure_json(io::read_file(cfg.measure), g.vertex_count());

    CurvatureVector k;
    std::string mode;
    json verification;
    if (const auto* fs = std::get_if<FiniteSupport>(&measure)) {
        if (cfg.mc)
            throw UsageError("a finite-support measure is averaged exactly; drop --mc/--samples");
        k = curvature_from_finite_measure(g, *fs, cfg.threads);
        mode = "finite_measure";
    } else if (cfg.mc) {
        k = mc_curvature(g, measure, cfg.samples.value_or(kDefaultSamples), cfg.seed, cfg.threads);
        mode = "monte_carlo";
    } else {
        k = exact_curvature(g, opts);
        mode = "exact";
        const FunctionalGaussBonnetReport f = verify_functional_gauss_bonnet(g, opts);
        verification["functional_gauss_bonnet"] = f.passed;
    }
    const GaussBonnetReport gbr = verify_gauss_bonnet(k, g, opts);
    verification["gauss_bonnet"] = gbr.passed;

    Report r;
    json res{{"graph", graph_json(lg)}, {"mode", mode}};
    if (k.mode == CurvatureVector::Mode::monte_carlo)
        res["samples"] = k.samples;
    res["curvature"] = curvature_values(k);
    res["total"] = rational_json(gbr.total);
    res["chi"] = to_string(gbr.chi);
    res["gauss_bonnet_basis"] = gbr.basis;
    r.doc["results"] = std::move(res);
    r.passed = gbr.passed && verification.value("functional_gauss_bonnet", true);
    r.doc["verification"] = std::move(verification);
    r.table = curvature_table(k, nullptr);
    return r;
}

Report run_classify(const RunConfig& cfg)
{
    const io::LoadedGraph lg = io::load_graph(cfg.graph);
    std::string how;
    const Orientation o = load_orientation(cfg, lg.graph, how);
    const morse2d::Classification c = morse2d::classify_all(lg.graph, o);
    Report r;
    json vertices = json::array();
    r.table.columns = {"vertex", "kind", "incoming_components", "index"};
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        const morse2d::VertexClass& vc = c.vertices[v];
        const std::string kind(morse2d::to_string(vc.kind));
        vertices.push_back(json{{"vertex", v}, {"kind", kind}, {"incoming_components", vc.incoming_components}, {"index", vc.index}});
        r.table.rows.push_back({std::to_string(v), kind, std::to_string(vc.incoming_components), std::to_string(vc.index)});
    }
    r.doc["results"] = json{{"graph", graph_json(lg)},
                            {"orientation", how},
                            {"vertices", vertices},
                            {"counts", {{"source", c.sources}, {"sink", c.sinks}, {"regular", c.regular}, {"saddle", c.saddles}}},
                            {"index_sum", std::to_string(c.index_sum)},
                            {"chi", to_string(c.chi)}};
    r.doc["verification"] = json{{"poincare_hopf", c.passed}};
    r.passed = c.passed;
    return r;
}

Report run_sample(const RunConfig& cfg)
{
    const geometric::PointCloud pc = io::sample_shape(cfg.shape);
    if (!cfg.save.empty()) {
        std::ostringstream out;
        geometric::write_point_cloud(out, pc);
        io::write_file(cfg.save, out.str());
    }
    Report r;
    json res{{"shape", cfg.shape}, {"points", pc.size()}, {"dim", pc.dim()}};
    if (pc.size() >= 2) {
        res["nearest_neighbor_spacing"] = geometric::nearest_neighbor_spacing(pc);
        res["default_epsilon"] = geometric::default_epsilon(pc);
    }
    r.doc["results"] = std::move(res);
    r.table.columns = {"vertex"};
    for (auto& c : coordinate_columns(pc.dim()))
        r.table.columns.push_back(c);
    for (std::size_t v = 0; v < pc.size(); ++v) {
        std::vector<std::string> row = {std::to_string(v)};
        for (double x : pc.point(v))
            row.push_back(fmt(x));
        r.table.rows.push_back(std::move(row));
    }
    return r;
}

Report run_epsgraph(const RunConfig& cfg)
{
    const geometric::PointCloud pc = load_cloud(cfg);
    const EpsChoice eps = choose_epsilon(cfg, pc);
    const Graph g = geometric::build_eps_graph(pc, {eps.epsilon});
    if (!cfg.save.empty())
        io::write_file(cfg.save, io::graph_to_json(g));
    const FVector f = count_simplices(g, complex_options(cfg, true));
    Report r;
    r.doc["results"] = json{{"points", pc.size()},
                            {"epsilon", eps.epsilon},
                            {"epsilon_source", eps.source},
                            {"nearest_neighbor_spacing", eps.spacing},
                            {"edges", g.edge_count()},
                            {"f_vector", big_array(f.counts)},
                            {"truncated", f.truncated},
                            {"chi", f.truncated ? json(nullptr) : json(to_string(euler_characteristic(f)))}};
    return r;
}

Report run_embed_curv(const RunConfig& cfg)
{
    const geometric::PointCloud pc = load_cloud(cfg);
    const EpsChoice eps = choose_epsilon(cfg, pc);
    const Graph g = geometric::build_eps_graph(pc, {eps.epsilon});
    const std::uint64_t directions = cfg.samples.value_or(kDefaultSamples);
    const CurvatureVector k = geometric::embedded_curvature(pc, g, directions, cfg.seed, cfg.threads);
    const GaussBonnetReport gbr = verify_gauss_bonnet(k, g, complex_options(cfg, false));
    Report r;
    r.doc["results"] = json{{"points", pc.size()},
                            {"epsilon", eps.epsilon},
                            {"epsilon_source", eps.source},
                            {"edges", g.edge_count()},
                            {"directions", directions},
                            {"curvature", curvature_values(k)},
                            {"total", rational_json(gbr.total)},
                            {"chi", to_string(gbr.chi)},
                            {"gauss_bonnet_basis", gbr.basis}};
    r.doc["verification"] = json{{"gauss_bonnet", gbr.passed}};
    r.passed = gbr.passed;
    r.table = curvature_table(k, &pc);
    return r;
}

Report run_experiment(const RunConfig& cfg)
{
    experiments::ExperimentReport e;
    if (cfg.experiment == "triangles")
        e = experiments::triangle_cycle_fraction(cfg.n, cfg.p, cfg.trials, cfg.seed, cfg.threads);
    else if (cfg.experiment == "irrotational")
        e = experiments::irrotational_probability(cfg.n, cfg.p, cfg.trials, cfg.seed, cfg.threads);
    else
        e = experiments::effective_density_check(cfg.n, cfg.p, cfg.trials, cfg.seed, cfg.threads);

    json estimates = json::array();
    for (const auto& est : e.estimates)
        estimates.push_back(json{{"name", est.name}, {"value", est.value}, {"standard_error", est.standard_error}});
    json targets = json::array();
    for (const auto& t : e.targets) {
        json entry{{"name", t.name}, {"value", t.value}};
        // Distance in standard errors when an estimate of the same name exists.
        for (const auto& est : e.estimates)
            if (est.name == t.name && est.standard_error > 0)
                entry["deviation_in_standard_errors"] = (est.value - t.value) / est.standard_error;
        targets.push_back(std::move(entry));
    }
    Report r;
    r.doc["results"] = json{{"kind", e.kind},
                            {"estimates", estimates},
                            {"targets", targets},
                            {"empty_denominator", e.empty_denominator},
                            {"notes", e.notes}};
    r.table.columns = e.columns;
    for (const auto& row : e.rows) {
        std::vector<std::string> cells;
        for (double x : row)
            cells.push_back(fmt(x));
        r.table.rows.push_back(std::move(cells));
    }
    return r;
}

} // namespace

std::string to_string(Command c)
{
    for (const auto& [name, cmd] : kCommands)
        if (cmd == c)
            return name;
    return "?";
}

RunConfig parse_args(const std::vector<std::string>& args)
{
    RunConfig cfg;
    CLI::App app{"Poincare-Hopf indices, curvature and Euler characteristics of finite simple graphs", "phcurv"};
    app.set_version_flag("--version", std::string("phcurv ") + kVersion);
    app.require_subcommand(1);

    std::string format = "json";
    std::optional<std::uint64_t> budget;
    std::optional<std::uint64_t> samples;
    std::optional<double> epsilon;
    std::optional<std::size_t> max_dim;

    struct Sub {
        CLI::App* app;
        Command cmd;
    };
    std::vector<Sub> subs;
    const auto add = [&](Command cmd, const char* help) {
        CLI::App* s = app.add_subcommand(to_string(cmd), help);
        s->add_option("-o,--output", cfg.output, "Write the report here instead of stdout");
        s->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
        s->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
        s->add_flag("--timing", cfg.timing, "Add wall-clock timing (reports are no longer byte-stable)");
        subs.push_back({s, cmd});
        return s;
    };
    const auto graph_opt = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("-g,--graph", cfg.graph, "Registry name (cycle:k, path:k, complete:k, octahedron, icosahedron, utility) or graph file");
        if (required)
            o->required();
    };
    const auto budget_opt = [&](CLI::App* s) {
        s->add_option("--budget", budget, "Simplex budget (default PHCURV_BUDGET or 1e8)");
    };
    const auto seed_opt = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "Random seed"); };
    const auto plot_opt = [&](CLI::App* s) { s->add_option("--plot-data", cfg.plot_data, "Write per-row CSV here"); };
    const auto orientation_opts = [&](CLI::App* s) {
        auto* c = s->add_option("--coloring", cfg.coloring, "Coloring JSON {\"values\": [...]}");
        auto* a = s->add_option("--arcs", cfg.arcs, "Orientation JSON {\"arcs\": [[u, v], ...]}");
        c->excludes(a);
    };
    const auto cloud_opts = [&](CLI::App* s) {
        auto* c = s->add_option("--cloud", cfg.cloud, "Point-cloud CSV with a '# dim=d' header");
        auto* sh = s->add_option("--shape", cfg.shape, "circle:N[:radius], sphere:RxM, torus:NxM[:R:r] or lemniscate:N");
        c->excludes(sh);
        s->add_option("--epsilon", epsilon, "Edge threshold (default 1.5 x nearest-neighbour spacing)");
    };

    auto* chi = add(Command::chi, "Euler characteristic of the Whitney complex");
    graph_opt(chi, true);
    budget_opt(chi);

    auto* fvec = add(Command::fvector, "f-vector of the Whitney complex");
    graph_opt(fvec, true);
    budget_opt(fvec);
    fvec->add_option("--max-dim", max_dim, "Only count simplices up to this dimension");

    auto* index = add(Command::index, "Poincare-Hopf indices of a coloring or an orientation");
    graph_opt(index, true);
    orientation_opts(index);
    budget_opt(index);
    plot_opt(index);

    auto* verify = add(Command::verify, "Check the index, f-function and Gauss-Bonnet identities");
    graph_opt(verify, false);
    auto* vcol = verify->add_option("--coloring", cfg.coloring, "Also check this coloring");
    verify->add_option("--instances", cfg.instances, "Random colorings, or random graphs without --graph");
    seed_opt(verify);
    budget_opt(verify);

    auto* curv = add(Command::curvature, "Curvature as the expected index");
    graph_opt(curv, true);
    auto* exact = curv->add_flag("--exact", cfg.exact, "Exact curvature from the unit spheres (default)");
    auto* mc = curv->add_flag("--mc", cfg.mc, "Monte Carlo over random colorings");
    auto* samp = curv->add_option("--samples", samples, "Monte Carlo samples (default 10000)");
    exact->excludes(mc);
    exact->excludes(samp);
    curv->add_option("--measure", cfg.measure, "Measure JSON (uniform-order or finite-support)");
    seed_opt(curv);
    budget_opt(curv);
    plot_opt(curv);

    auto* classify = add(Command::classify, "Critical-point types on a 2-graph");
    graph_opt(classify, true);
    orientation_opts(classify);
    budget_opt(classify);
    plot_opt(classify);

    auto* sample = add(Command::sample, "Generate a point cloud");
    sample->add_option("--shape", cfg.shape, "circle:N[:radius], sphere:RxM, torus:NxM[:R:r] or lemniscate:N")->required();
    sample->add_option("--save", cfg.save, "Write the cloud CSV here");

    auto* eps = add(Command::epsgraph, "Epsilon-graph of a point cloud and its Whitney complex");
    cloud_opts(eps);
    eps->add_option("--save", cfg.save, "Write the graph JSON here");
    eps->add_option("--max-dim", max_dim, "Only count simplices up to this dimension");
    budget_opt(eps);

    auto* embed = add(Command::embed_curv, "Expected index over random height functions of a point cloud");
    cloud_opts(embed);
    embed->add_option("--samples", samples, "Height directions (default 10000)");
    seed_opt(embed);
    budget_opt(embed);
    plot_opt(embed);

    auto* exp = add(Command::experiment, "Random directed Erdos-Renyi statistics");
    exp->add_option("kind", cfg.experiment, "triangles, irrotational or effective-density")
        ->required()
        ->check(CLI::IsMember({"triangles", "irrotational", "effective-density"}));
    exp->add_option("--n", cfg.n, "Vertices")->required();
    exp->add_option("--p", cfg.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    exp->add_option("--trials", cfg.trials, "Random digraphs (default 1000)");
    seed_opt(exp);
    plot_opt(exp);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForVersion&) {
        throw HelpRequested{std::string("phcurv ") + kVersion + "\n"};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (const Sub& s : subs)
        if (s.app->parsed())
            cfg.command = s.cmd;
    cfg.format = format == "csv" ? Format::csv : Format::json;
    cfg.samples = samples;
    cfg.epsilon = epsilon;
    cfg.max_dim = max_dim;

    if (cfg.format == Format::csv && !has_table(cfg.command))
        throw UsageError(to_string(cfg.command) + " has no tabular output; use --format json");
    if (budget) {
        if (*budget == 0)
            throw UsageError("--budget must be positive");
        cfg.budget = *budget;
    } else {
        try {
            cfg.budget = budget_from_environment();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (cfg.samples && *cfg.samples == 0)
        throw UsageError("--samples must be positive");
    if (cfg.command == Command::curvature && cfg.samples)
        cfg.mc = true;
    if (cfg.trials == 0 || cfg.instances == 0)
        throw UsageError("--trials and --instances must be positive");
    if (cfg.epsilon && !(*cfg.epsilon > 0 && std::isfinite(*cfg.epsilon)))
        throw UsageError("--epsilon must be a positive number");
    if ((cfg.command == Command::epsgraph || cfg.command == Command::embed_curv) && cfg.cloud.empty() && cfg.shape.empty())
        throw UsageError("one of --cloud or --shape is required");
    if (cfg.command == Command::verify && !cfg.coloring.empty() && cfg.graph.empty())
        throw UsageError("--coloring needs --graph");
    (void)vcol;
    return cfg;
}

RunResult run(const RunConfig& cfg)
{
    Report r;
    switch (cfg.command) {
    case Command::chi: r = run_chi(cfg); break;
    case Command::fvector: r = run_fvector(cfg); break;
    case Command::index: r = run_index(cfg); break;
    case Command::verify: r = run_verify(cfg); break;
    case Command::curvature: r = run_curvature(cfg); break;
    case Command::classify: r = run_classify(cfg); break;
    case Command::sample: r = run_sample(cfg); break;
    case Command::epsgraph: r = run_epsgraph(cfg); break;
    case Command::embed_curv: r = run_embed_curv(cfg); break;
    case Command::experiment: r = run_experiment(cfg); break;
    }
    json doc{{"tool", "phcurv"}, {"version", kVersion}, {"command", to_string(cfg.command)}, {"config", config_echo(cfg)}};
    doc["results"] = std::move(r.doc["results"]);
    doc["verification"] = r.doc.contains("verification") ? std::move(r.doc["verification"]) : json::object();
    doc["passed"] = r.passed;
    r.doc = std::move(doc);
    const int code = exit_code_for(r);
    return {std::move(r), code};
}

int exit_code_for(const Report& r) { return r.passed ? 0 : 2; }

std::string render_json(const Report& r) { return r.doc.dump(2) + "\n"; }

std::string render_csv(const Table& t)
{
    const auto columns = t.columns.empty() ? std::vector<std::string>{"vertex", "value", "stderr", "exact"} : t.columns;
    std::string out;
    const auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0)
                out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(columns);
    for (const auto& row : t.rows)
        line(row);
    return out;
}

void emit_plot_data(const Report& r, const std::string& path) { io::write_file(path, render_csv(r.table)); }

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const HelpRequested& h) {
        out << h.text;
        return 0;
    } catch (const UsageError& e) {
        err << "phcurv: " << e.what() << "\nRun 'phcurv --help' for usage.\n";
        return 1;
    }
    try {
        const auto start = std::chrono::steady_clock::now();
        RunResult res = run(cfg);
        if (cfg.timing)
            res.report.doc["timing"] = json{
                {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
        const std::string text = cfg.format == Format::csv ? render_csv(res.report.table) : render_json(res.report);
        if (cfg.output.empty())
            out << text;
        else
            io::write_file(cfg.output, text);
        if (!cfg.plot_data.empty())
            emit_plot_data(res.report, cfg.plot_data);
        if (res.exit_code != 0)
            err << "phcurv: verification failed\n";
        return res.exit_code;
    } catch (const BudgetExceeded& e) {
        err << "phcurv: " << e.what() << " (raise --budget or PHCURV_BUDGET)\n";
    } catch (const UsageError& e) {
        err << "phcurv: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "phcurv: " << e.what() << "\n";
    }
    return 1;
}

} // namespace phcurv::cli
