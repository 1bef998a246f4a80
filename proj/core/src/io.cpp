#include "uswsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uswsim/errors.hpp"

namespace uswsim {

namespace {

// strips a trailing '#' comment and surrounding whitespace
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_two(const std::string& s, unsigned long long& a, unsigned long long& b) {
    std::istringstream iss(s);
    if (!(iss >> a >> b)) return false;
    std::string rest;
    if (iss >> rest) return false;  // trailing tokens
    return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    unsigned long long n = 0, m = 0;
    bool have_header = false;
    while (!have_header && std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        if (!parse_two(s, n, m)) throw ParseError("bad header, expected 'n m'", lineno);
        have_header = true;
    }
    // EOF-detected problems point one past the last line
    if (!have_header) throw ParseError("missing 'n m' header", lineno + 1);

    Graph g(static_cast<std::size_t>(n));
    unsigned long long seen = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s = clean_line(raw);
        if (s.empty()) continue;
        unsigned long long u = 0, v = 0;
        if (!parse_two(s, u, v)) throw ParseError("bad edge, expected 'u v'", lineno);
        if (u >= n || v >= n)
            throw ParseError("vertex id out of range (n = " + std::to_string(n) + ")", lineno);
        if (u == v) throw ParseError("self loop", lineno);
        if (seen >= m) throw ParseError("more edges than the header announced", lineno);
        if (!g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)))
            throw ParseError("duplicate edge", lineno);
        ++seen;
    }
    if (seen != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, file has " +
                             std::to_string(seen),
                         lineno + 1);
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file: " + path);
    try {
        return read_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError::wrap(path + ": " + e.what(), e.line());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    if (g.num_alive() != g.capacity())
        throw GraphError("write_edge_list: graph has removed vertices; labels not contiguous");
    out << g.num_alive() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.alive_edges()) out << u << ' ' << v << '\n';
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write graph file: " + path);
    write_edge_list(g, out);
    if (!out) throw Error("write failed: " + path);
}

std::string meta_path_for(const std::string& graph_path) {
    return graph_path + ".meta.json";
}

void save_meta(const GeneratorConfig& cfg, const std::string& graph_path) {
    nlohmann::json j;
    j["format_version"] = 1;
    j["family"] = family_token(cfg.family);
    j["n"] = cfg.n;
    j["seed"] = cfg.seed;
    j["max_retries"] = cfg.max_retries;
    switch (cfg.family) {
        case Family::Random: j["p"] = cfg.p; break;
        case Family::PowerLaw: j["m_attach"] = cfg.m_attach; break;
        case Family::SmallWorld:
            j["k"] = cfg.k;
            j["p"] = cfg.p;
            break;
        case Family::Usw: {
            nlohmann::json u;
            u["beta"] = cfg.usw.beta;
            u["gamma"] = cfg.usw.gamma;
            u["t"] = cfg.usw.t;
            u["l_repair"] = cfg.usw.l_repair;
            if (cfg.usw.alpha) u["alpha"] = *cfg.usw.alpha;
            u["attachment_policy"] = "uniform_random";
            u["visitation_policy"] = "queue_order";
            u["queue_policy"] = "fifo";
            j["usw"] = u;
            break;
        }
    }
    std::ofstream out(meta_path_for(graph_path));
    if (!out) throw Error("cannot write metadata: " + meta_path_for(graph_path));
    out << j.dump(2) << '\n';
}

std::optional<GeneratorConfig> load_meta(const std::string& graph_path) {
    std::ifstream in(meta_path_for(graph_path));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        GeneratorConfig cfg;
        cfg.family = parse_family(j.at("family").get<std::string>());
        cfg.n = j.at("n").get<std::size_t>();
        cfg.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("max_retries")) cfg.max_retries = j["max_retries"].get<std::size_t>();
        if (j.contains("p")) cfg.p = j["p"].get<double>();
        if (j.contains("m_attach")) cfg.m_attach = j["m_attach"].get<std::size_t>();
        if (j.contains("k")) cfg.k = j["k"].get<std::size_t>();
        if (j.contains("usw")) {
            const auto& u = j["usw"];
            cfg.usw.beta = u.at("beta").get<double>();
            cfg.usw.gamma = u.at("gamma").get<double>();
            if (u.contains("t")) cfg.usw.t = u["t"].get<double>();
            if (u.contains("l_repair")) cfg.usw.l_repair = u["l_repair"].get<std::size_t>();
            if (u.contains("alpha")) cfg.usw.alpha = u["alpha"].get<double>();
        }
        return cfg;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad metadata in " + meta_path_for(graph_path) + ": " + e.what());
    }
}

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;  // flush -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace uswsim
