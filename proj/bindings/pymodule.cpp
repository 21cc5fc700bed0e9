#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arlat/arith_hilbert.hpp"
#include "arlat/heights.hpp"
#include "arlat/io.hpp"

namespace py = pybind11;
using namespace arlat;

namespace {

// dict/str <-> nlohmann::json bridge through the standard json module
json to_json(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return json::parse(obj.cast<std::string>());
    py::object dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object to_py(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

ZVec zvec_of(const std::vector<long>& v) {
    ZVec z(v.size());
    for (size_t i = 0; i < v.size(); ++i) z[i] = v[i];
    return z;
}

py::dict height_dict(const HeightEstimate& h) {
    py::dict d;
    d["value"] = h.value;
    d["stderr"] = h.stderr_;
    d["samples"] = h.samples;
    d["exact"] = h.exact;
    return d;
}

py::dict arith_dict(const ArithHilbertValue& v) {
    py::dict d;
    d["value"] = v.value;
    d["det_gram"] = rational_str(v.det_gram);
    d["metric"] = v.metric_kind;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact lattices of homogeneous forms: Hilbert functions, heights, short vectors";
    m.attr("__version__") = "0.1.0";

    m.def("stoll_number", [](int t) { return stoll_number(t).get_d(); });
    m.def("stoll_number_exact", [](int t) { return rational_str(stoll_number(t)); });
    m.def("monomial_norm_sq",
          [](const std::vector<int>& e) { return rational_str(monomial_norm_sq(e)); });
    m.def("l2_inner_product", [](const py::object& f, const py::object& g) {
        return rational_str(l2_inner_product(form_from_json(to_json(f)), form_from_json(to_json(g))));
    });
    m.def("form_product", [](const py::object& f, const py::object& g) {
        return to_py(form_to_json(form_product(form_from_json(to_json(f)), form_from_json(to_json(g)))));
    });
    m.def("coefficient_sup_bound",
          [](const py::object& f) { return coefficient_sup_bound(form_from_json(to_json(f))); });

    m.def("saturate", [](const std::vector<std::vector<long>>& vectors, int ambient) {
        std::vector<ZVec> vs;
        for (const auto& v : vectors) vs.push_back(zvec_of(v));
        return to_py(lattice_to_json(saturate(vs, ambient)));
    });
    m.def("minkowski_bound",
          [](const py::object& l) { return minkowski_bound(lattice_from_json(to_json(l))); });
    m.def("short_vector", [](const py::object& l) {
        ShortVectorCertificate sv = short_vector(lattice_from_json(to_json(l)));
        py::dict d;
        py::list vec;
        for (const auto& x : sv.vector) vec.append(x.get_si());
        d["vector"] = vec;
        d["log_length"] = sv.log_length;
        d["minkowski_rhs"] = sv.minkowski_rhs;
        d["method"] = sv.method;
        return d;
    });

    m.def("vanishing_lattice", [](const py::object& s, int d) {
        return to_py(lattice_to_json(vanishing_lattice(scheme_from_json(to_json(s)), d)));
    });
    m.def("hilbert_fn",
          [](const py::object& s, int d) { return hilbert_fn(scheme_from_json(to_json(s)), d); });
    m.def("check_alHilbert", [](const py::object& s, int d) {
        return to_py(check_alHilbert(scheme_from_json(to_json(s)), d).to_json());
    });
    m.def("check_alHilbinf", [](const py::object& s, int d) {
        return to_py(check_alHilbinf(scheme_from_json(to_json(s)), d).to_json());
    });
    m.def("combine_avoiding_zeros", [](const std::vector<std::vector<std::string>>& rows) {
        std::vector<QVec> vs;
        for (const auto& r : rows) {
            QVec q;
            for (const auto& x : r) q.push_back(parse_rational(x));
            vs.push_back(std::move(q));
        }
        return combine_avoiding_zeros(vs);
    });
    m.def("interpolate", [](const py::object& y, const py::object& x, int d) {
        InterpolationResult r =
            interpolate(scheme_from_json(to_json(y)), scheme_from_json(to_json(x)), d);
        py::dict o;
        o["form"] = to_py(form_to_json(r.form));
        o["log_norm"] = r.log_norm;
        o["minkowski_rhs"] = r.minkowski_rhs;
        py::list wit;
        for (const auto& w : r.nonvanishing_witness) wit.append(rational_str(w));
        o["witnesses"] = wit;
        o["combination"] = r.combination;
        return o;
    });
    m.def("build_chain", [](const py::object& y, int cap) {
        ChainResult r = build_chain(scheme_from_json(to_json(y)), cap);
        py::dict o;
        py::list steps;
        for (const auto& s : r.steps) {
            py::dict st;
            st["degree"] = s.degree;
            st["cycle_degree"] = s.cycle_degree.get_si();
            st["hilbert_ratio"] = s.hilbert_ratio;
            st["form"] = to_py(form_to_json(s.hypersurface));
            steps.append(st);
        }
        o["steps"] = steps;
        o["complete"] = r.complete;
        o["message"] = r.message;
        return o;
    });

    m.def("arith_hilbert_ambient",
          [](int t, int d) { return arith_hilbert_ambient(t, d).value; });
    m.def("arith_hilbert", [](const py::object& s, int d) {
        return arith_dict(arith_hilbert(scheme_from_json(to_json(s)), d));
    });
    m.def("arith_hilbert_on_x", [](const py::object& s, int d) {
        return arith_dict(arith_hilbert_on_x(scheme_from_json(to_json(s)), d));
    });
    m.def("check_arHilbert_part1", [](const py::object& s, int d) {
        return to_py(check_arHilbert_part1(scheme_from_json(to_json(s)), d).to_json());
    });
    m.def("check_arHilbert_parts23", [](const py::object& s, int d) {
        return to_py(check_arHilbert_parts23(scheme_from_json(to_json(s)), d).to_json());
    });
    m.def("check_3bew", [](const py::object& y, const py::object& x, int d) {
        return to_py(
            check_3bew(scheme_from_json(to_json(y)), scheme_from_json(to_json(x)), d).to_json());
    });
    m.def("check_mlnull", [](const py::object& s, int d) {
        return to_py(check_mlnull(scheme_from_json(to_json(s)), d).to_json());
    });

    m.def("point_height",
          [](const std::vector<long>& v) { return point_height(zvec_of(v)).value; });
    m.def("fs_log_integral", [](const py::object& f, long samples, uint64_t seed) {
        return height_dict(fs_log_integral(form_from_json(to_json(f)), samples, seed));
    });
    m.def("divisor_height", [](const py::object& f, long samples, uint64_t seed) {
        return height_dict(divisor_height(form_from_json(to_json(f)), samples, seed));
    });
    m.def("split_divisor_height_oracle",
          [](const py::object& f, const std::vector<std::vector<long>>& roots) {
              std::vector<ZVec> rs;
              for (const auto& r : roots) rs.push_back(zvec_of(r));
              return height_dict(split_divisor_height_oracle(form_from_json(to_json(f)), rs));
          });
    m.def("bezout_check",
          [](const py::object& x, const py::object& y,
             const std::vector<std::vector<long>>& points, long samples, uint64_t seed) {
              std::vector<IntersectionPoint> ipts;
              for (const auto& p : points) ipts.push_back({zvec_of(p), 1});
              return to_py(bezout_check(scheme_from_json(to_json(x)),
                                        scheme_from_json(to_json(y)), ipts, samples, seed)
                               .to_json());
          });
    m.def("sharp_bezout_check",
          [](const std::vector<int>& zeroed, const py::object& f, long samples, uint64_t seed) {
              return to_py(
                  sharp_bezout_check(zeroed, form_from_json(to_json(f)), samples, seed).to_json());
          });
    m.def("transcendence_profile", [](int d, double h, uint64_t seed) {
        auto [t0, t1] = random_unit_theta(seed);
        TranscendenceProfile p = transcendence_profile(t0, t1, d, h, seed);
        py::dict o;
        o["D"] = p.degree_d;
        o["H"] = p.budget_h;
        o["achieved"] = p.achieved;
        o["rhs_paper"] = p.rhs_paper;
        o["non_generic"] = p.non_generic;
        o["witness"] = to_py(form_to_json(p.witness_form));
        o["witness_log_norm"] = p.witness_log_norm;
        o["theta"] = py::make_tuple(p.theta0, p.theta1);
        return o;
    });
}
