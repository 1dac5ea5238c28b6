#include "run_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>

#include "polyspec/errors.hpp"
#include "polyspec/rational.hpp"

namespace cli {

using polyspec::ParameterError;
using polyspec::Rational;
using polyspec::RationalMatrix;
using polyspec::SchemaError;

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

namespace {

void check_keys(const Json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!j.is_object()) throw SchemaError(path + ": expected an object");
    for (const auto& item : j.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* a) { return item.key() == a; });
        if (!known) throw SchemaError(path + ": unknown key '" + item.key() + "'");
    }
}

double get_number(const Json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path + ": expected a number");
    return j.get<double>();
}

int get_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return j.get<int>();
}

bool get_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) throw SchemaError(path + ": expected a boolean");
    return j.get<bool>();
}

std::string get_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path + ": expected a string");
    return j.get<std::string>();
}

std::string get_enum(const Json& j, const std::string& path,
                     std::initializer_list<const char*> values) {
    const std::string s = get_string(j, path);
    if (std::any_of(values.begin(), values.end(), [&](const char* v) { return s == v; })) return s;
    std::string msg = path + ": expected one of";
    for (const char* v : values) msg += std::string(" '") + v + "'";
    throw SchemaError(msg);
}

struct EntryParse {
    double value = 0.0;
    std::optional<Rational> exact;
};

EntryParse parse_entry_text(const std::string& s) {
    try {
        const Rational q = polyspec::parse_rational(s);
        return {polyspec::rational_to_double(q), q};
    } catch (const ParameterError&) {
    }
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos == s.size()) return {v, std::nullopt};
    } catch (const std::exception&) {
    }
    throw ParameterError("not a numeric entry: '" + s + "'");
}

EntryParse parse_entry_json(const Json& e, const std::string& path) {
    if (e.is_number_integer()) {
        const long long v = e.get<long long>();
        return {static_cast<double>(v), Rational(v)};
    }
    if (e.is_number()) return {e.get<double>(), std::nullopt};
    if (e.is_string()) {
        try {
            const Rational q = polyspec::parse_rational(e.get<std::string>());
            return {polyspec::rational_to_double(q), q};
        } catch (const ParameterError&) {
            throw SchemaError(path + ": string entries must be rational literals");
        }
    }
    throw SchemaError(path + ": matrix entries must be numbers or rational strings");
}

struct MatrixParse {
    Eigen::MatrixXd m;
    std::optional<RationalMatrix> exact;
};

MatrixParse assemble_matrix(const std::vector<std::vector<EntryParse>>& rows,
                            const std::string& where) {
    const int n = static_cast<int>(rows.size());
    if (n < 2) throw ParameterError(where + ": matrix must be at least 2 x 2");
    MatrixParse out;
    out.m.resize(n, n);
    RationalMatrix exact;
    exact.n = n;
    exact.a.assign(static_cast<std::size_t>(n) * n, Rational(0));
    bool all_exact = true;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw ParameterError(where + ": matrix must be square");
        for (int j = 0; j < n; ++j) {
            out.m(i, j) = rows[i][j].value;
            if (rows[i][j].exact)
                exact.at(i, j) = *rows[i][j].exact;
            else
                all_exact = false;
        }
    }
    if (all_exact) out.exact = std::move(exact);
    return out;
}

MatrixParse parse_matrix_text(const std::string& text, const std::string& where) {
    std::vector<std::vector<EntryParse>> rows;
    for (const std::string& row : split_list(text, ';')) {
        rows.emplace_back();
        for (const std::string& entry : split_list(row, ',')) rows.back().push_back(parse_entry_text(entry));
    }
    return assemble_matrix(rows, where);
}

MatrixParse parse_matrix_value(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path + ": expected an array of rows");
    std::vector<std::vector<EntryParse>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& row = j[i];
        if (!row.is_array()) throw SchemaError(path + ": expected an array of rows");
        rows.emplace_back();
        for (std::size_t k = 0; k < row.size(); ++k)
            rows.back().push_back(parse_entry_json(row[k], path));
    }
    try {
        return assemble_matrix(rows, path);
    } catch (const ParameterError& e) {
        throw SchemaError(e.what());
    }
}

polyspec::GroupElement element_from_factors(const std::string& realization,
                                            std::vector<MatrixParse> factors,
                                            const std::string& where) {
    if (realization == "sln") {
        if (factors.size() != 1)
            throw ParameterError(where + ": sln generators take exactly one matrix");
        if (factors[0].exact) return polyspec::make_sln(*factors[0].exact);
        return polyspec::make_sln(factors[0].m);
    }
    if (realization == "product_sl2") {
        const bool all_exact = std::all_of(factors.begin(), factors.end(),
                                           [](const MatrixParse& f) { return f.exact.has_value(); });
        if (all_exact) {
            std::vector<RationalMatrix> ms;
            for (auto& f : factors) ms.push_back(std::move(*f.exact));
            return polyspec::make_product_sl2(ms);
        }
        std::vector<Eigen::Matrix2d> ms;
        for (const auto& f : factors) {
            if (f.m.rows() != 2)
                throw ParameterError(where + ": product factors must be 2 x 2");
            ms.push_back(f.m);
        }
        return polyspec::make_product_sl2(ms);
    }
    throw ParameterError("unknown realization '" + realization + "'");
}

}  // namespace

polyspec::GroupElement parse_matrix_arg(const std::string& realization, const std::string& text) {
    std::vector<MatrixParse> factors;
    for (const std::string& part : split_list(text, '|'))
        factors.push_back(parse_matrix_text(part, "--matrix"));
    return element_from_factors(realization, std::move(factors), "--matrix");
}

polyspec::GroupElement parse_matrix_json(const std::string& realization, const Json& j,
                                         const std::string& path) {
    std::vector<MatrixParse> factors;
    if (realization == "product_sl2") {
        if (!j.is_array() || j.empty()) throw SchemaError(path + ": expected an array of factors");
        for (std::size_t i = 0; i < j.size(); ++i)
            factors.push_back(parse_matrix_value(j[i], path));
    } else {
        factors.push_back(parse_matrix_value(j, path));
    }
    try {
        return element_from_factors(realization, std::move(factors), path);
    } catch (const ParameterError& e) {
        throw SchemaError(e.what());
    }
}

RunConfig config_from_json(const Json& j) {
    RunConfig cfg;
    check_keys(j, "config",
               {"schema_version", "root_system", "generators", "analysis", "output"});
    if (!j.contains("schema_version")) throw SchemaError("config: schema_version is required");
    if (get_int(j["schema_version"], "schema_version") != kConfigSchemaVersion)
        throw SchemaError("schema_version: this build reads version " +
                          std::to_string(kConfigSchemaVersion));
    if (!j.contains("root_system")) throw SchemaError("config: root_system is required");

    const Json& rsj = j["root_system"];
    check_keys(rsj, "root_system", {"preset", "multiplicity", "n", "rhos"});
    if (!rsj.contains("preset")) throw SchemaError("root_system: preset is required");
    cfg.root_system.preset = get_enum(rsj["preset"], "root_system.preset", {"a2", "b2", "product"});
    if (rsj.contains("multiplicity")) {
        if (cfg.root_system.preset != "a2")
            throw SchemaError("root_system.multiplicity: only valid for preset 'a2'");
        cfg.root_system.multiplicity = get_number(rsj["multiplicity"], "root_system.multiplicity");
    }
    if (rsj.contains("n")) {
        if (cfg.root_system.preset != "b2")
            throw SchemaError("root_system.n: only valid for preset 'b2'");
        cfg.root_system.n = get_int(rsj["n"], "root_system.n");
    }
    if (rsj.contains("rhos")) {
        if (cfg.root_system.preset != "product")
            throw SchemaError("root_system.rhos: only valid for preset 'product'");
        if (!rsj["rhos"].is_array()) throw SchemaError("root_system.rhos: expected an array");
        cfg.root_system.rhos.clear();
        for (std::size_t i = 0; i < rsj["rhos"].size(); ++i)
            cfg.root_system.rhos.push_back(
                parse_entry_json(rsj["rhos"][i], "root_system.rhos").value);
    }

    if (j.contains("generators")) {
        const Json& g = j["generators"];
        check_keys(g, "generators",
                   {"realization", "matrices", "include_inverses", "max_word_length",
                    "element_cap"});
        if (!g.contains("realization") || !g.contains("matrices"))
            throw SchemaError("generators: realization and matrices are required");
        cfg.generators.present = true;
        cfg.generators.realization =
            get_enum(g["realization"], "generators.realization", {"sln", "product_sl2"});
        if (!g["matrices"].is_array() || g["matrices"].empty())
            throw SchemaError("generators.matrices: expected a non-empty array");
        for (std::size_t i = 0; i < g["matrices"].size(); ++i)
            cfg.generators.generators.push_back(
                parse_matrix_json(cfg.generators.realization, g["matrices"][i],
                                  "generators.matrices[" + std::to_string(i) + "]"));
        if (g.contains("include_inverses"))
            cfg.generators.include_inverses =
                get_bool(g["include_inverses"], "generators.include_inverses");
        if (g.contains("max_word_length"))
            cfg.generators.max_word_length =
                get_int(g["max_word_length"], "generators.max_word_length");
        if (g.contains("element_cap")) {
            const int cap = get_int(g["element_cap"], "generators.element_cap");
            if (cap <= 0) throw SchemaError("generators.element_cap: must be positive");
            cfg.generators.element_cap = static_cast<std::size_t>(cap);
        }
    }

    if (j.contains("analysis")) {
        const Json& a = j["analysis"];
        check_keys(a, "analysis",
                   {"mu", "basis", "mode", "aperture", "direction_grid", "window",
                    "window_fraction", "metric_scale", "margin"});
        if (a.contains("mu")) {
            if (!a["mu"].is_array() || a["mu"].empty())
                throw SchemaError("analysis.mu: expected a non-empty array of strings");
            cfg.analysis.mu.clear();
            for (std::size_t i = 0; i < a["mu"].size(); ++i)
                cfg.analysis.mu.push_back(get_string(a["mu"][i], "analysis.mu"));
        }
        if (a.contains("basis"))
            cfg.analysis.basis = get_enum(a["basis"], "analysis.basis", {"std", "root"});
        if (a.contains("mode"))
            cfg.analysis.mode = get_enum(a["mode"], "analysis.mode", {"plain", "modified"});
        if (a.contains("aperture"))
            cfg.analysis.aperture = get_number(a["aperture"], "analysis.aperture");
        if (a.contains("direction_grid"))
            cfg.analysis.direction_grid = get_int(a["direction_grid"], "analysis.direction_grid");
        if (a.contains("window")) {
            check_keys(a["window"], "analysis.window", {"lo", "hi"});
            if (!a["window"].contains("lo") || !a["window"].contains("hi"))
                throw SchemaError("analysis.window: lo and hi are required");
            WindowConfig w;
            w.lo = get_number(a["window"]["lo"], "analysis.window.lo");
            w.hi = get_number(a["window"]["hi"], "analysis.window.hi");
            cfg.analysis.window = w;
        }
        if (a.contains("window_fraction"))
            cfg.analysis.window_fraction = get_number(a["window_fraction"], "analysis.window_fraction");
        if (a.contains("metric_scale"))
            cfg.analysis.metric_scale = get_number(a["metric_scale"], "analysis.metric_scale");
        if (a.contains("margin")) cfg.analysis.margin = get_number(a["margin"], "analysis.margin");
    }

    if (j.contains("output")) {
        const Json& o = j["output"];
        check_keys(o, "output", {"dir", "formats", "timestamp"});
        if (o.contains("dir")) cfg.output.dir = get_string(o["dir"], "output.dir");
        if (o.contains("formats")) {
            if (!o["formats"].is_array()) throw SchemaError("output.formats: expected an array");
            cfg.output.json = cfg.output.csv = cfg.output.text = false;
            for (std::size_t i = 0; i < o["formats"].size(); ++i) {
                const std::string f =
                    get_enum(o["formats"][i], "output.formats", {"json", "csv", "text"});
                if (f == "json") cfg.output.json = true;
                if (f == "csv") cfg.output.csv = true;
                if (f == "text") cfg.output.text = true;
            }
        }
        if (o.contains("timestamp"))
            cfg.output.timestamp = get_bool(o["timestamp"], "output.timestamp");
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

BuiltPreset build_preset(const RootSystemConfig& c) {
    BuiltPreset out;
    if (c.preset == "a2") {
        polyspec::A2BuildResult r = polyspec::make_a2_family(c.multiplicity);
        out.rs = std::move(r.rs);
        out.warning = std::move(r.warning);
    } else if (c.preset == "b2") {
        out.rs = polyspec::make_b2_so2n(c.n);
    } else if (c.preset == "product") {
        out.rs = polyspec::make_product_a1(c.rhos);
    } else {
        throw ParameterError("unknown preset '" + c.preset + "'");
    }
    return out;
}

double parse_scalar(const std::string& text) { return parse_entry_text(text).value; }

polyspec::Functional parse_functional(const polyspec::RootSystem& rs, const std::string& text,
                                      const std::string& basis) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParameterError("empty functional");
    if (s == "rho") return rs.rho;
    if (s[0] == 'a' && s.size() > 1 &&
        std::all_of(s.begin() + 1, s.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const int k = std::stoi(s.substr(1));
        if (k < 1 || k > static_cast<int>(rs.positive_roots.size()))
            throw ParameterError("no positive root named '" + s + "'");
        return rs.positive_roots[static_cast<std::size_t>(k - 1)].functional;
    }
    const std::vector<std::string> parts = split_list(s, ',');
    if (static_cast<int>(parts.size()) != rs.rank)
        throw ParameterError("functional '" + text + "' needs " + std::to_string(rs.rank) +
                             " coordinates");
    Eigen::VectorXd v(rs.rank);
    for (int i = 0; i < rs.rank; ++i) v(i) = parse_scalar(parts[static_cast<std::size_t>(i)]);
    if (basis == "std") return rs.from_std(v);
    if (basis == "root") return rs.from_root_coords(v);
    throw ParameterError("unknown basis '" + basis + "' (use 'std' or 'root')");
}

}  // namespace cli
