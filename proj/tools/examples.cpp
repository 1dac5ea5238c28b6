#include "examples.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyspec/errors.hpp"
#include "polyspec/polyhedra.hpp"
#include "polyspec/verdicts.hpp"
#include "polyspec/weyl.hpp"

namespace cli {

using namespace polyspec;

namespace {

void check_close(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol))
        throw NumericError(what + ": expected " + fmt_num(want) + ", computed " + fmt_num(got));
}

// k/2 as "k/2" or an integer when even; the examples quote halves symbolically
std::string half_text(int k) {
    if (k % 2 == 0) return std::to_string(k / 2);
    return std::to_string(k) + "/2";
}

std::string grid_label(double x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

TextReport example_sl3(Json& payload) {
    const A2BuildResult build = make_a2_family(1);
    const RootSystem& rs = build.rs;
    const WeylGroup w = make_weyl_group(rs);

    // rho must coincide with the highest root for multiplicity one
    const Functional& alpha3 = rs.positive_roots[2].functional;
    if (!approx_equal(rs.rho.std_coords, alpha3.std_coords, 1e-12))
        throw NumericError("sl3: rho does not match the highest root");

    if (!is_hermitian_dominant(rs, w, rs.rho))
        throw NumericError("sl3: rho unexpectedly fails the involution check");
    Eigen::VectorXd off(2);
    off << 2, 1;
    if (is_hermitian_dominant(rs, w, rs.from_root_coords(off)))
        throw NumericError("sl3: off-ray functional unexpectedly passes the involution check");

    const PropertyTBound decay = property_t_functional(rs);
    check_close((decay.theta_functional.std_coords - 0.5 * rs.rho.std_coords).norm(), 0.0, 1e-12,
                "sl3 decay functional");

    const double sample_dp = 0.5;
    const A2BoundaryPoint pt = a2_boundary_point(rs, sample_dp);
    check_close(pt.cap, 1.0, 1e-15, "sl3 gauge cap");
    check_close(poly_norm(rs, w, pt.point, rs.rho), sample_dp, 1e-12, "sl3 boundary gauge");

    TextReport t;
    t.line("example", "sl3");
    t.line("preset", rs.describe());
    t.line("rank", std::to_string(rs.rank));
    t.line("|W|", std::to_string(w.elements.size()));
    t.line("rho", "ρ = α₃");
    t.line("hermitian cone", "the ray through ρ");
    t.line("limit-cone criterion",
           to_string(limit_cone_temperedness(rs, LimitConeStats{{}, 1.0})));
    t.blank();
    t.raw("closed forms");
    t.raw("  ρ = α₃ = α₁ + α₂");
    t.raw("  Θ = 1/2·ρ");
    t.raw("  gauge cap: (2m−1)/m = 1 for m = 1");
    t.blank();
    t.line("boundary point demo", "δ′(ρ) = " + fmt_num(sample_dp) + " (sample value)");
    t.line("point", fmt_num(pt.theta) + "·ρ = " + fmt_coords(pt.point.std_coords));
    t.line("gauge of point", fmt_num(sample_dp));
    t.line("within cap", pt.within_cap ? "yes" : "no");
    t.line("caveat", pt.caveat);
    t.blank();
    t.raw("gauge caps by multiplicity");
    Json caps = Json::array();
    for (int m : {1, 2, 4, 8}) {
        const A2BoundaryPoint capped = a2_boundary_point(make_a2_family(m).rs, 0.0);
        check_close(capped.cap, (2.0 * m - 1.0) / m, 1e-15, "sl3 cap table");
        t.line("  m = " + std::to_string(m), fmt_num(capped.cap));
        caps.push_back({{"m", m}, {"cap", capped.cap}});
    }

    payload["preset"] = rs.describe();
    payload["weyl_order"] = w.elements.size();
    payload["rho"] = json_functional(rs.rho);
    payload["decay_functional"] = json_functional(decay.theta_functional);
    payload["boundary_point"] = json_functional(pt.point);
    payload["gauge_caps"] = caps;
    return t;
}

TextReport example_product(Json& payload) {
    const RootSystem rs = make_product_a1({0.5, 0.5});
    const WeylGroup w = make_weyl_group(rs);

    const ProductReference sample = product_reference(0.7, 0.3, 0.5, 0.5, 1.0, 1.0);
    check_close(sample.sup_norm, 0.2, 1e-12, "product sup norm");
    if (sample.tempered) throw NumericError("product: sample verdict should not be tempered");

    const double ep = rank_one_bottom(0.75, 0.5);
    check_close(ep, 3.0 / 16.0, 1e-15, "rank-one bottom");

    // one-factor interval must pinch onto the same closed form
    const RootSystem line = make_product_a1({0.5});
    const LaplaceInterval pinch = laplace_bottom_interval(line, 0.5, line.rho);
    check_close(pinch.lo, pinch.hi, 1e-13, "rank-one interval width");
    check_close(pinch.lo, ep, 1e-13, "rank-one interval value");

    TextReport t;
    t.line("example", "product");
    t.line("preset", rs.describe());
    t.line("rank", std::to_string(rs.rank));
    t.line("|W|", std::to_string(w.elements.size()));
    t.line("rho", fmt_coords(rs.rho.std_coords));
    t.line("limit-cone criterion",
           std::string(to_string(limit_cone_temperedness(rs, LimitConeStats{{}, 0.0}))) +
               " (lattice cone reaches the walls)");
    t.blank();
    t.raw("closed forms");
    t.raw("  sup gauge = max((δ₁−ρ₁)/μ₁, (δ₂−ρ₂)/μ₂, 0)");
    t.raw("  ψ(H) = δ₁·|H₁| + δ₂·|H₂|");
    t.raw("  tempered ⇔ δ₁ ≤ ρ₁ and δ₂ ≤ ρ₂");
    t.raw("  rank-one bottom: 1/4 − (δ − 1/2)² = 3/16 at δ = 3/4, ρ = 1/2");
    t.blank();
    t.line("sample verdict", "δ = (7/10, 3/10), μ = (1, 1)");
    t.line("sup gauge", fmt_num(sample.sup_norm));
    t.line("psi", "ψ(H) = " + fmt_num(sample.psi_slope_1) + "·|H₁| + " +
                      fmt_num(sample.psi_slope_2) + "·|H₂|");
    t.line("tempered", sample.tempered ? "yes" : "no");
    t.line("degenerate interval", "lo = hi = " + fmt_num(pinch.lo) + " at δ = 3/4 (one factor)");
    t.blank();
    t.raw("temperedness over the (δ₁, δ₂) grid, step 1/20 (T = tempered)");
    int tempered_cells = 0;
    for (int k2 = 20; k2 >= 1; --k2) {
        std::string row = "  δ₂ = " + grid_label(k2 / 20.0) + "  ";
        for (int k1 = 1; k1 <= 20; ++k1) {
            const bool temp =
                product_reference(k1 / 20.0, k2 / 20.0, 0.5, 0.5, 1.0, 1.0).tempered;
            row += temp ? 'T' : '.';
            tempered_cells += temp ? 1 : 0;
        }
        t.raw(row);
    }
    t.raw("  δ₁ from 0.05 to 1.00, left to right");
    if (tempered_cells != 100)
        throw NumericError("product: tempered region should cover a 10 x 10 block");
    t.line("tempered cells", std::to_string(tempered_cells) + " of 400");

    payload["preset"] = rs.describe();
    payload["sample"] = {{"delta", {0.7, 0.3}},
                         {"mu", {1.0, 1.0}},
                         {"sup_norm", sample.sup_norm},
                         {"tempered", sample.tempered}};
    payload["rank_one_bottom"] = ep;
    payload["tempered_cells"] = tempered_cells;
    return t;
}

TextReport example_so2n(int n, Json& payload) {
    const RootSystem rs = make_b2_so2n(n);
    const WeylGroup w = make_weyl_group(rs);

    const So2nReference ref = so2n_reference(rs, 1.0, 0.0);
    check_close(ref.delta_prime, (n - 2) / 2.0, 1e-12, "so2n delta prime");
    check_close(ref.psi_axis_slope, n - 1.0, 1e-12, "so2n psi slope");

    // the polyhedral datum must survive the grid intersection route
    std::vector<Functional> family;
    for (int k = 0; k <= 10; ++k) {
        const double t = 0.1 * k;
        Eigen::VectorXd mu(2);
        mu << 1.0, t;
        family.push_back(rs.scale(rs.from_std(mu), so2n_reference(rs, 1.0, t).delta_prime));
    }
    const Functional meet = intersect(rs, family);
    if (!approx_equal(meet.std_coords, ref.mu_gamma.std_coords, 1e-9))
        throw NumericError("so2n: grid intersection drifted from the closed form");

    const PropertyTBound decay = property_t_functional(rs);
    const Functional cap_ref = rs.scale(rs.positive_roots[3].functional, (n - 2) / 2.0);
    check_close((decay.cap_generator.std_coords - cap_ref.std_coords).norm(), 0.0, 1e-12,
                "so2n decay cap generator");

    const double dp_rho = so2n_reference(rs, rs.rho.std_coords(0), rs.rho.std_coords(1)).delta_prime;
    check_close(dp_rho, (n - 2.0) / n, 1e-12, "so2n delta prime at rho");
    const TemperednessReport temp = temperedness_report(rs, dp_rho);
    const LaplaceInterval box =
        laplace_bottom_interval(rs, ref.delta_prime, rs.positive_roots[2].functional);

    TextReport t;
    t.line("example", "so2n (n = " + std::to_string(n) + ")");
    t.line("preset", rs.describe());
    t.line("rank", std::to_string(rs.rank));
    t.line("|W|", std::to_string(w.elements.size()));
    t.line("rho", fmt_coords(rs.rho.std_coords));
    t.line("direction", "μ = α₃ = (1, 0)");
    t.blank();
    t.raw("closed forms");
    t.raw("  δ′ = " + half_text(n - 2));
    t.raw("  μ_Γ₀ = " + half_text(n - 2) + "·α₃");
    t.raw("  ψ_Γ₀(v) = " + fmt_num(ref.psi_axis_slope) + "·v₁ on the axis v₂ = 0");
    t.raw("  decay cap: " + decay.cap_text);
    t.blank();
    t.line("grid intersect check", "ok (within 1e-9 of " + half_text(n - 2) + "·α₃)");
    t.line("decay functional", "Θ(v) = v₁");
    t.line("tempered", temp.tempered ? "yes" : ("no (δ′(ρ) = " + fmt_num(dp_rho) + ")"));
    t.line("p upper bound", fmt_num(temp.p_upper));
    t.line("Laplace interval", "[" + fmt_num(box.lo) + ", " + fmt_num(box.hi) + "] for μ = α₃");
    t.line("limit-cone criterion",
           std::string(to_string(limit_cone_temperedness(rs, LimitConeStats{{}, 0.0}))) +
               " (limit cone on a chamber wall)");

    payload["preset"] = rs.describe();
    payload["n"] = n;
    payload["delta_prime"] = ref.delta_prime;
    payload["mu_gamma"] = json_functional(ref.mu_gamma);
    payload["psi_axis_slope"] = ref.psi_axis_slope;
    payload["delta_prime_rho"] = dp_rho;
    payload["tempered"] = temp.tempered;
    payload["p_upper"] = json_num(temp.p_upper);
    payload["laplace_interval"] = {{"lo", box.lo}, {"hi", box.hi}};
    return t;
}

}  // namespace

void run_example(const ExampleOptions& opt) {
    std::string golden_name;
    Json payload;
    TextReport report;
    if (opt.name == "sl3") {
        golden_name = "sl3.txt";
        report = example_sl3(payload);
    } else if (opt.name == "product") {
        golden_name = "product.txt";
        report = example_product(payload);
    } else if (opt.name == "so2n") {
        if (opt.n != 3 && opt.n != 5 && opt.n != 10)
            throw ParameterError("goldens ship for n = 3, 5, 10");
        golden_name = "so2n_n" + std::to_string(opt.n) + ".txt";
        report = example_so2n(opt.n, payload);
    } else {
        throw ParameterError("unknown example '" + opt.name + "' (use sl3, product, so2n)");
    }

    const std::filesystem::path golden_path =
        std::filesystem::path(opt.goldens_dir) / golden_name;
    const std::string body = report.str();

    if (opt.write_golden) {
        std::filesystem::create_directories(opt.goldens_dir);
        std::ofstream out(golden_path);
        out << body;
        OutputSink sink(opt.output, "example");
        payload["example"] = opt.name;
        payload["golden"] = {{"file", golden_path.string()}, {"status", "written"}};
        sink.emit_json(payload);
        sink.emit_text(report);
        return;
    }

    std::ifstream in(golden_path, std::ios::binary);
    if (!in) throw ParameterError("golden file not found: " + golden_path.string());
    std::ostringstream golden;
    golden << in.rdbuf();

    const bool match = golden.str() == body;
    OutputSink sink(opt.output, "example");
    payload["example"] = opt.name;
    payload["golden"] = {{"file", golden_path.string()},
                         {"status", match ? "match" : "mismatch"}};
    sink.emit_json(payload);
    sink.emit_text(report);

    if (!match) {
        // locate the first differing line for the error message
        std::istringstream got(body), want(golden.str());
        std::string g, x;
        int lineno = 0;
        while (true) {
            ++lineno;
            const bool has_g = static_cast<bool>(std::getline(got, g));
            const bool has_w = static_cast<bool>(std::getline(want, x));
            if (!has_g && !has_w) break;
            if (g != x || has_g != has_w)
                throw GoldenMismatchError("golden mismatch at line " + std::to_string(lineno) +
                                          ": expected '" + x + "', got '" + g + "'");
        }
        throw GoldenMismatchError("golden mismatch (length difference)");
    }
}

}  // namespace cli
