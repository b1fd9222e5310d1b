#include "phcurv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "phcurv/registry.hpp"

namespace phcurv::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

template <class T>
T get_field(const json& j, const char* key, const char* what)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string(what) + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string(what) + ": field '" + key + "': " + e.what());
    }
}

std::vector<Edge> pairs_field(const json& j, const char* key, const char* what)
{
    const auto raw = get_field<std::vector<std::vector<long long>>>(j, key, what);
    std::vector<Edge> out;
    out.reserve(raw.size());
    for (const auto& pair : raw) {
        if (pair.size() != 2 || pair[0] < 0 || pair[1] < 0 || pair[0] > 0xffffffffLL || pair[1] > 0xffffffffLL)
            throw InputError(std::string(what) + ": each entry of '" + key + "' must be a pair of vertex ids");
        out.emplace_back(static_cast<Vertex>(pair[0]), static_cast<Vertex>(pair[1]));
    }
    return out;
}

std::vector<double> values_field(const json& j, std::size_t vertex_count, const char* what)
{
    const auto values = get_field<std::vector<double>>(j, "values", what);
    if (values.size() != vertex_count)
        throw InputError(std::string(what) + ": expected " + std::to_string(vertex_count) + " values, got " +
                         std::to_string(values.size()));
    return values;
}

std::size_t parse_count(std::string_view s, const std::string& spec)
{
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw InputError("bad number '" + std::string(s) + "' in shape '" + spec + "'");
    return v;
}

double parse_real(std::string_view s, const std::string& spec)
{
    double v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size())
        throw InputError("bad number '" + std::string(s) + "' in shape '" + spec + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw InputError("error reading '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << content;
    out.flush();
    if (!out)
        throw InputError("error writing '" + path + "'");
}

Graph parse_graph_text(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        long long a = 0;
        long long b = 0;
        if (!(ls >> a)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw InputError("line " + std::to_string(line_no) + ": expected two integers");
            continue;
        }
        std::string rest;
        if (!(ls >> b) || (ls >> rest) || a < 0 || b < 0)
            throw InputError("line " + std::to_string(line_no) + ": expected two non-negative integers");
        if (!header) {
            header.emplace(a, b);
            continue;
        }
        if (a >= header->first || b >= header->first)
            throw InputError("line " + std::to_string(line_no) + ": vertex out of range");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!header)
        throw InputError("graph text is missing the 'n m' header");
    if (edges.size() != static_cast<std::size_t>(header->second))
        throw InputError("header announces " + std::to_string(header->second) + " edges, found " + std::to_string(edges.size()));
    try {
        return Graph::from_edges(static_cast<std::size_t>(header->first), edges);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string graph_to_text(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph_json(const std::string& text)
{
    const json j = parse_json(text, "graph JSON");
    const auto n = get_field<long long>(j, "n", "graph JSON");
    if (n < 0)
        throw InputError("graph JSON: 'n' must be non-negative");
    const auto edges = pairs_field(j, "edges", "graph JSON");
    try {
        return Graph::from_edges(static_cast<std::size_t>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
}

std::string graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", edges}}.dump() + "\n";
}

LoadedGraph load_graph(const std::string& name_or_path)
{
    try {
        if (auto g = named_graph(name_or_path))
            return {std::move(*g), name_or_path};
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const std::string text = read_file(name_or_path);
    const bool is_json = name_or_path.size() >= 5 && name_or_path.ends_with(".json");
    if (is_json)
        return {parse_graph_json(text), name_or_path};
    std::istringstream in(text);
    return {parse_graph_text(in), name_or_path};
}

Coloring parse_coloring_json(const std::string& text, std::size_t vertex_count)
{
    const json j = parse_json(text, "coloring JSON");
    try {
        return Coloring(values_field(j, vertex_count, "coloring JSON"));
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("coloring JSON: ") + e.what());
    }
}

Orientation parse_orientation_json(const std::string& text, const Graph& g)
{
    const json j = parse_json(text, "orientation JSON");
    const auto arcs = pairs_field(j, "arcs", "orientation JSON");
    try {
        return Orientation::from_arcs(g, arcs);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("orientation JSON: ") + e.what());
    }
}

ColoringMeasure parse_measure_json(const std::string& text, std::size_t vertex_count)
{
    const json j = parse_json(text, "measure JSON");
    const auto type = get_field<std::string>(j, "type", "measure JSON");
    if (type == "uniform-order")
        return UniformOrder{};
    if (type != "finite-support")
        throw InputError("measure JSON: unknown type '" + type + "'");
    if (!j.contains("atoms") || !j.at("atoms").is_array())
        throw InputError("measure JSON: 'atoms' must be an array");
    FiniteSupport m;
    for (const json& atom : j.at("atoms")) {
        Rational weight;
        if (!atom.is_object() || !atom.contains("weight"))
            throw InputError("measure JSON: every atom needs a 'weight'");
        const json& w = atom.at("weight");
        try {
            if (w.is_string())
                weight = parse_rational(w.get<std::string>());
            else if (w.is_number_integer())
                weight = Rational(w.get<long long>());
            else
                throw InputError("measure JSON: weights must be \"p/q\" strings or integers");
            m.atoms.push_back({Coloring(values_field(atom, vertex_count, "measure JSON")), weight});
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("measure JSON: ") + e.what());
        }
    }
    try {
        validate(m);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("measure JSON: ") + e.what());
    }
    return m;
}

geometric::PointCloud sample_shape(const std::string& spec)
{
    const auto parts = split(spec, ':');
    const std::string_view kind = parts[0];
    try {
        if (kind == "circle" && (parts.size() == 2 || parts.size() == 3))
            return geometric::sample_circle(parse_count(parts[1], spec), parts.size() == 3 ? parse_real(parts[2], spec) : 1.0);
        if (kind == "lemniscate" && parts.size() == 2)
            return geometric::sample_lemniscate(parse_count(parts[1], spec));
        if (kind == "sphere" && parts.size() == 2) {
            const auto grid = split(parts[1], 'x');
            if (grid.size() == 2)
                return geometric::sample_sphere(parse_count(grid[0], spec), parse_count(grid[1], spec));
        }
        if (kind == "torus" && (parts.size() == 2 || parts.size() == 4)) {
            const auto grid = split(parts[1], 'x');
            if (grid.size() == 2) {
                const double big = parts.size() == 4 ? parse_real(parts[2], spec) : 2.0;
                const double small = parts.size() == 4 ? parse_real(parts[3], spec) : 1.0;
                return geometric::sample_torus(parse_count(grid[0], spec), parse_count(grid[1], spec), big, small);
            }
        }
    } catch (const std::invalid_argument& e) {
        throw InputError("shape '" + spec + "': " + e.what());
    }
    throw InputError("unknown shape '" + spec +
                     "' (expected circle:N[:radius], sphere:RxM, torus:NxM[:R:r] or lemniscate:N)");
}

geometric::PointCloud load_point_cloud(const std::string& path)
{
    std::istringstream in(read_file(path));
    try {
        return geometric::read_point_cloud(in, path);
    } catch (const std::invalid_argument& e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace phcurv::io
