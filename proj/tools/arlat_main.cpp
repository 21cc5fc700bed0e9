// arlat: batch CLI over exact lattices of homogeneous forms, Hilbert
// functions, heights, and the inequality checkers. One subcommand per run;
// header record first, then JSON lines (or CSV rows with --out csv).

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "arlat/arith_hilbert.hpp"
#include "arlat/heights.hpp"
#include "arlat/instances.hpp"
#include "arlat/io.hpp"

using namespace arlat;

namespace {

constexpr const char* kVersion = "0.1.0";

struct RunConfig {
    std::string command;
    std::string scheme_path;
    std::string scheme2_path;
    int t = 1;
    int d = 1;
    double h = 1.0;
    long samples = 100000;
    uint64_t seed = 0;
    std::string out = "json";
    double tolerance_sigma = 3.0;
    bool ambient = false;
};

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open input file: " + path);
    json j;
    in >> j;
    return j;
}

void emit_header(const RunConfig& c) {
    json cfg{{"t", c.t},       {"d", c.d},           {"h", c.h},
             {"samples", c.samples}, {"out", c.out}, {"tolerance_sigma", c.tolerance_sigma}};
    if (!c.scheme_path.empty()) cfg["scheme"] = c.scheme_path;
    if (!c.scheme2_path.empty()) cfg["scheme2"] = c.scheme2_path;
    json header{
        {"version", kVersion}, {"command", c.command}, {"config", cfg}, {"seed", c.seed}};
    std::printf("%s\n", header.dump().c_str());
}

void emit_row(const RunConfig& c, const json& row) {
    if (c.out == "csv") {
        std::string line;
        bool first = true;
        for (const auto& [k, v] : row.items()) {
            (void)k;
            if (!first) line += ",";
            first = false;
            if (v.is_number_float()) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.12g", v.get<double>());
                line += buf;
            } else if (v.is_string()) {
                line += v.get<std::string>();
            } else {
                line += v.dump();
            }
        }
        std::printf("%s\n", line.c_str());
    } else {
        std::printf("%s\n", row.dump().c_str());
    }
}

int run_hilbert(const RunConfig& c) {
    SchemeSpec s = scheme_from_json(load_json_file(c.scheme_path));
    BoundReport r = check_alHilbert(s, c.d);
    json row{{"H", static_cast<long>(r.lhs)}, {"upper", r.rhs}, {"holds", r.holds}};
    if (r.inputs.contains("lower")) row["lower"] = r.inputs["lower"];
    emit_row(c, row);
    return r.holds ? 0 : 1;
}

int run_arith_hilbert(const RunConfig& c) {
    if (c.ambient || c.scheme_path.empty()) {
        ArithHilbertValue v = arith_hilbert_ambient(c.t, c.d);
        emit_row(c, json{{"value", v.value}, {"metric", v.metric_kind}});
        return 0;
    }
    SchemeSpec s = scheme_from_json(load_json_file(c.scheme_path));
    ArithHilbertValue v = arith_hilbert(s, c.d);
    json row{{"value", v.value},
             {"metric", v.metric_kind},
             {"det_gram", rational_str(v.det_gram)}};
    bool reduced_points = !s.empty() && s.hypersurfaces().empty();
    for (const auto& p : s.fat_points())
        if (p.order != 1) reduced_points = false;
    if (reduced_points) {
        size_t npts = s.fat_points().size();
        size_t n = monomials(s.t(), c.d).size();
        if (n - vanishing_lattice(s, c.d).rank() == npts) {
            ArithHilbertValue vx = arith_hilbert_on_x(s, c.d);
            row["value_on_x"] = vx.value;
        }
    }
    emit_row(c, row);
    return 0;
}

int run_shortvec(const RunConfig& c) {
    json j = load_json_file(c.scheme_path);
    MetrizedLattice l = j.contains("basis") ? lattice_from_json(j)
                                            : vanishing_lattice(scheme_from_json(j), c.d);
    ShortVectorCertificate sv = short_vector(l);
    json vec = json::array();
    for (const auto& x : sv.vector) vec.push_back(x.fits_slong_p() ? json(x.get_si())
                                                                   : json(x.get_str()));
    emit_row(c, json{{"vector", vec},
                     {"log_length", sv.log_length},
                     {"minkowski_rhs", sv.minkowski_rhs},
                     {"method", sv.method},
                     {"holds", sv.log_length <= sv.minkowski_rhs + 1e-12}});
    return 0;
}

int run_interpolate(const RunConfig& c) {
    SchemeSpec y = scheme_from_json(load_json_file(c.scheme_path));
    SchemeSpec x = scheme_from_json(load_json_file(c.scheme2_path));
    InterpolationResult r = interpolate(y, x, c.d);
    json wit = json::array();
    for (const auto& w : r.nonvanishing_witness) wit.push_back(rational_str(w));
    emit_row(c, json{{"form", form_to_json(r.form)},
                     {"log_norm", r.log_norm},
                     {"minkowski_rhs", r.minkowski_rhs},
                     {"witnesses", wit},
                     {"combination", r.combination},
                     {"holds", r.log_norm <= r.minkowski_rhs + 1e-12}});
    return 0;
}

int run_chain(const RunConfig& c) {
    SchemeSpec y = scheme_from_json(load_json_file(c.scheme_path));
    ChainResult r = build_chain(y, c.d);
    int i = 1;
    for (const auto& step : r.steps) {
        emit_row(c, json{{"step", i++},
                         {"degree", step.degree},
                         {"cycle_degree", step.cycle_degree.get_si()},
                         {"hilbert_ratio", step.hilbert_ratio},
                         {"form", form_to_json(step.hypersurface)}});
    }
    emit_row(c, json{{"complete", r.complete}, {"message", r.message}});
    return r.complete ? 0 : 1;
}

int run_height(const RunConfig& c) {
    json j = load_json_file(c.scheme_path);
    if (j.contains("coeffs")) {
        HomogeneousForm f = form_from_json(j);
        HeightEstimate h = divisor_height(f, c.samples, c.seed);
        h.seed = c.seed;
        emit_row(c, h.to_json());
        return 0;
    }
    SchemeSpec s = scheme_from_json(j);
    double sum = 0;
    for (const auto& p : s.fat_points()) sum += point_height(p.point).value;
    emit_row(c, json{{"value", sum},
                     {"stderr", 0.0},
                     {"samples", 0},
                     {"exact", true},
                     {"seed", c.seed}});
    return 0;
}

std::vector<IntersectionPoint> auto_intersection(const SchemeSpec& x, const SchemeSpec& y) {
    // the desk-scale shapes: lines in P^2 meet in their cross product; point
    // cycles against P^t or against a divisor carry their own points; binary
    // form pairs on P^1 intersect over the finite places only
    auto is_line = [](const SchemeSpec& s) {
        return s.fat_points().empty() && s.hypersurfaces().size() == 1 &&
               s.hypersurfaces()[0].degree() == 1;
    };
    if (x.t() == 2 && is_line(x) && is_line(y)) {
        auto lincoef = [](const SchemeSpec& s) {
            ZVec v(3, 0);
            for (const auto& [e, cf] : s.hypersurfaces()[0].coefficients())
                for (int i = 0; i < 3; ++i)
                    if (e[i] == 1) v[i] = cf.get_num();
            return v;
        };
        ZVec a = lincoef(x), b = lincoef(y);
        ZVec cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]};
        if (is_zero(cross)) throw precondition_error("bezout: common component (equal lines)");
        return {{primitive_part(cross), 1}};
    }
    if (!x.fat_points().empty() && y.empty()) {
        std::vector<IntersectionPoint> pts;
        for (const auto& p : x.fat_points()) pts.push_back({p.point, 1});
        return pts;
    }
    if (!y.fat_points().empty() && x.empty()) {
        std::vector<IntersectionPoint> pts;
        for (const auto& p : y.fat_points()) pts.push_back({p.point, 1});
        return pts;
    }
    return {};
}

int run_bezout(const RunConfig& c) {
    SchemeSpec x = scheme_from_json(load_json_file(c.scheme_path));
    SchemeSpec y = scheme_from_json(load_json_file(c.scheme2_path));
    BoundReport r =
        bezout_check(x, y, auto_intersection(x, y), c.samples, c.seed, c.tolerance_sigma);
    emit_row(c, r.to_json());
    return r.holds ? 0 : 1;
}

int run_sharp_bezout(const RunConfig& c) {
    HomogeneousForm f = form_from_json(load_json_file(c.scheme_path));
    SchemeSpec sub = scheme_from_json(load_json_file(c.scheme2_path));
    std::vector<int> zeroed;
    for (const auto& h : sub.hypersurfaces()) {
        if (h.coefficients().size() != 1 || h.degree() != 1)
            throw precondition_error("sharp-bezout: subspace file must list coordinate forms");
        const auto& e = h.coefficients().begin()->first;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] == 1) zeroed.push_back(static_cast<int>(i));
    }
    BoundReport r = sharp_bezout_check(zeroed, f, c.samples, c.seed);
    emit_row(c, r.to_json());
    return r.holds ? 0 : 1;
}

int run_transcendence(const RunConfig& c) {
    auto [t0, t1] = random_unit_theta(c.seed);
    TranscendenceProfile p = transcendence_profile(t0, t1, c.d, c.h, c.seed);
    double ratio = p.non_generic ? std::numeric_limits<double>::infinity()
                                 : p.achieved / p.rhs_paper;
    if (c.out == "csv") {
        std::printf("%d,%.12g,%.12g,%.12g,%.12g\n", p.degree_d, p.budget_h, p.achieved,
                    p.rhs_paper, ratio);
    } else {
        emit_row(c, json{{"D", p.degree_d},
                         {"H", p.budget_h},
                         {"achieved", p.achieved},
                         {"rhs_paper", p.rhs_paper},
                         {"ratio", ratio},
                         {"non_generic", p.non_generic},
                         {"witness", form_to_json(p.witness_form)},
                         {"witness_log_norm", p.witness_log_norm}});
    }
    return 0;
}

int run_bounds(const RunConfig& c) {
    SplitStream rng(c.seed, 99);
    bool all_hold = true;
    auto emit = [&](const BoundReport& r) {
        emit_row(c, r.to_json());
        all_hold = all_hold && r.holds;
    };

    for (int i = 0; i < 12; ++i) {
        SchemeSpec s = random_point_scheme(c.t, 4, 5, rng);
        emit(check_alHilbert(s, c.d));
        emit(check_mlnull(s, c.d));
        emit(check_arHilbert_parts23(s, c.d));
        emit(check_arHilbert_part1(s, c.d));
    }
    for (int i = 0; i < 6; ++i) {
        SchemeSpec s = random_fat_point_scheme(c.t, 3, 3, 5, rng);
        emit(check_alHilbinf(s, c.d));
        emit(check_alHilbert(s, c.d));
        emit(check_mlnull(s, c.d));
    }
    for (int i = 0; i < 4; ++i) {
        SchemeSpec s = random_mixed_scheme(c.t, 2, std::min(c.d, 2), 3, rng);
        emit(check_alHilbert(s, c.d));
    }
    for (int i = 0; i < 6; ++i) {
        SchemeSpec y = random_point_scheme(c.t, 2, 5, rng);
        SchemeSpec extra = random_point_scheme(c.t, 2, 5, rng);
        SchemeSpec x = y.union_with(extra);
        emit(check_3bew(y, x, c.d));
    }
    for (int i = 0; i < 8; ++i) {
        MetrizedLattice l = random_saturated_lattice(2 + static_cast<int>(i % 4), 8, 7, rng);
        ShortVectorCertificate sv = short_vector(l);
        json inputs{{"rank", l.rank()}, {"method", sv.method}};
        BoundReport r = BoundReport::make("minkowski_certificate", sv.log_length,
                                          sv.minkowski_rhs, inputs);
        emit(r);
    }
    for (int i = 0; i < 5; ++i) {
        LinearBezoutInstance inst = random_linear_bezout_instance(5, rng);
        SchemeSpec x(2), y(2);
        x.add_hypersurface(inst.f);
        y.add_hypersurface(inst.g);
        emit(bezout_check(x, y, {{inst.intersection, 1}}, c.samples, c.seed + i,
                          c.tolerance_sigma));
    }
    for (int i = 0; i < 3; ++i) {
        SplitFormInstance a = random_split_binary_form(2, 4, rng);
        SplitFormInstance b = random_split_binary_form(2, 4, rng);
        if (!forms_coprime(a.f, b.f)) continue;
        SchemeSpec x(1), y(1);
        x.add_hypersurface(a.f);
        y.add_hypersurface(b.f);
        emit(bezout_check(x, y, {}, c.samples, c.seed + 10 + i, c.tolerance_sigma));
    }
    for (int i = 0; i < 3; ++i) {
        HomogeneousForm f = random_integral_form(2, 1 + (i % 2), 4, rng);
        if (f.restrict_to_coordinate_subspace({0}).is_zero()) continue;
        emit(sharp_bezout_check({0}, f, c.samples, c.seed + 20 + i));
    }
    return all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattices of homogeneous forms: Hilbert functions, heights, short "
                 "vectors, interpolation, and inequality checkers"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::pair<std::string, int (*)(const RunConfig&)>> cmds = {
        {"hilbert", run_hilbert},           {"arith-hilbert", run_arith_hilbert},
        {"shortvec", run_shortvec},         {"interpolate", run_interpolate},
        {"chain", run_chain},               {"height", run_height},
        {"bezout", run_bezout},             {"sharp-bezout", run_sharp_bezout},
        {"bounds", run_bounds},             {"transcendence", run_transcendence}};

    std::map<std::string, int (*)(const RunConfig&)> dispatch;
    for (auto& [name, fn] : cmds) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--t", cfg.t);
        sub->add_option("--d", cfg.d);
        sub->add_option("--h", cfg.h);
        sub->add_option("--scheme", cfg.scheme_path);
        sub->add_option("--scheme2", cfg.scheme2_path);
        sub->add_option("--samples", cfg.samples);
        sub->add_option("--seed", cfg.seed);
        sub->add_option("--out", cfg.out)->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tolerance-sigma", cfg.tolerance_sigma);
        if (name == "arith-hilbert") sub->add_flag("--ambient", cfg.ambient);
        dispatch[name] = fn;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    try {
        emit_header(cfg);
        return dispatch[cfg.command](cfg);
    } catch (const json::exception& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const arlat::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
