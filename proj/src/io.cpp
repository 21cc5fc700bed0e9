#include "arlat/io.hpp"

namespace arlat {

namespace {

mpz_class mpz_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    throw error("expected an integer (number or decimal string)");
}

json mpz_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

}  // namespace

json form_to_json(const HomogeneousForm& f) {
    json coeffs = json::array();
    for (const auto& [e, c] : f.coefficients()) {
        json ent = json::array();
        ent.push_back(e);
        ent.push_back(rational_str(c));
        coeffs.push_back(std::move(ent));
    }
    return json{{"t", f.dimension()}, {"d", f.degree()}, {"coeffs", coeffs}};
}

HomogeneousForm form_from_json(const json& j) {
    int t = j.at("t").get<int>();
    int d = j.at("d").get<int>();
    std::map<Exponents, mpq_class, GrlexLess> m;
    for (const auto& ent : j.at("coeffs")) {
        Exponents e = ent.at(0).get<Exponents>();
        mpq_class c = parse_rational(ent.at(1).is_string() ? ent.at(1).get<std::string>()
                                                           : ent.at(1).dump());
        m[e] += c;
    }
    return HomogeneousForm(t, d, std::move(m));
}

json scheme_to_json(const SchemeSpec& s) {
    json points = json::array();
    for (const auto& p : s.fat_points()) {
        json coords = json::array();
        for (const auto& c : p.point) coords.push_back(mpz_to_json(c));
        points.push_back(json{{"coords", coords}, {"order", p.order}});
    }
    json hyps = json::array();
    for (const auto& h : s.hypersurfaces()) hyps.push_back(form_to_json(h));
    json out{{"t", s.t()}, {"points", points}, {"hypersurfaces", hyps}};
    if (s.lci_witness_degrees()) out["lci_witness"] = *s.lci_witness_degrees();
    return out;
}

SchemeSpec scheme_from_json(const json& j) {
    SchemeSpec s(j.at("t").get<int>());
    if (j.contains("points"))
        for (const auto& p : j.at("points")) {
            ZVec coords;
            for (const auto& c : p.at("coords")) coords.push_back(mpz_from_json(c));
            s.add_point(std::move(coords), p.value("order", 1));
        }
    if (j.contains("hypersurfaces"))
        for (const auto& h : j.at("hypersurfaces")) s.add_hypersurface(form_from_json(h));
    if (j.contains("lci_witness")) s.set_lci_witness(j.at("lci_witness").get<std::vector<int>>());
    return s;
}

json lattice_to_json(const MetrizedLattice& l) {
    json basis = json::array();
    for (const auto& row : l.basis()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(mpz_to_json(x));
        basis.push_back(std::move(r));
    }
    json out{{"ambient_dim", l.ambient_dim()}, {"basis", basis}};
    const auto& m = l.metric();
    if (m.l2_forms_tag) {
        out["metric"] = "l2_forms";
        out["t"] = m.l2_forms_tag->first;
        out["d"] = m.l2_forms_tag->second;
    } else if (m.kind == AmbientMetric::Kind::identity) {
        out["metric"] = "identity";
    } else {
        QMat g = (m.kind == AmbientMetric::Kind::dense) ? m.dense : QMat{};
        if (m.kind == AmbientMetric::Kind::diagonal) {
            g = qmat(m.dim, m.dim);
            for (int i = 0; i < m.dim; ++i) g[i][i] = m.diag[i];
        }
        json rows = json::array();
        for (const auto& row : g) {
            json r = json::array();
            for (const auto& x : row) r.push_back(rational_str(x));
            rows.push_back(std::move(r));
        }
        out["metric"] = rows;
    }
    return out;
}

MetrizedLattice lattice_from_json(const json& j) {
    int n = j.at("ambient_dim").get<int>();
    ZMat basis;
    for (const auto& row : j.at("basis")) {
        ZVec r;
        for (const auto& x : row) r.push_back(mpz_from_json(x));
        basis.push_back(std::move(r));
    }
    AmbientMetric metric = AmbientMetric::identity(n);
    const auto& m = j.at("metric");
    if (m.is_string() && m.get<std::string>() == "l2_forms") {
        metric = AmbientMetric::l2_forms(j.at("t").get<int>(), j.at("d").get<int>());
    } else if (m.is_string() && m.get<std::string>() == "identity") {
        metric = AmbientMetric::identity(n);
    } else if (m.is_array()) {
        QMat g;
        for (const auto& row : m) {
            QVec r;
            for (const auto& x : row)
                r.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
            g.push_back(std::move(r));
        }
        metric = AmbientMetric::dense_gram(std::move(g));
    } else {
        throw error("lattice json: unknown metric");
    }
    if (metric.dim != n) throw shape_error("lattice json: metric dimension mismatch");
    return MetrizedLattice(n, std::move(metric), std::move(basis));
}

}  // namespace arlat
