// Python bindings for the main operations: ratio sets, Ceva checks,
// the no-Cevian-family scan, finite distributive lattices, the cube
// diagrams, finite-scale condensates, region containment, and the SVG
// plotter.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cevalat/ceva.hpp"
#include "cevalat/diagrams.hpp"
#include "cevalat/finlat.hpp"
#include "cevalat/plot.hpp"
#include "cevalat/psbool.hpp"
#include "cevalat/scenario.hpp"

namespace py = pybind11;
using namespace cevalat;

namespace {

RatioSet rs(const std::string& text) { return RatioSet::parse(text); }

py::dict verdict_dict(const CevaVerdict& v) {
    py::dict d;
    d["hyp_0"] = v.hyp_0;
    d["hyp_notfull"] = v.hyp_notfull;
    d["hyp_chain"] = v.hyp_chain;
    d["all_hypotheses"] = v.all_hypotheses();
    if (v.conclusion)
        d["conclusion"] = py::make_tuple(v.conclusion->first.str(),
                                         v.conclusion->second.str());
    else
        d["conclusion"] = py::none();
    return d;
}

std::vector<std::string> rat_strs(const std::vector<Rat>& xs) {
    std::vector<std::string> out;
    for (const Rat& x : xs) out.push_back(x.str());
    return out;
}

P3 parse_p3(const std::string& name) {
    std::optional<P3> p = p3_parse(name);
    if (!p) throw py::value_error("not a subset of {1,2,3}: '" + name + "'");
    return *p;
}

}  // namespace

PYBIND11_MODULE(_cevalat, m) {
    m.doc() = "Exact checkers for cones, Ceva configurations, and Cevian lattices";

    py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);

    py::class_<RatioSet>(m, "RatioSet")
        .def(py::init(&rs), py::arg("text"))
        .def_static("initial", [](const std::string& x) {
            return RatioSet::initial(Rat::parse(x));
        })
        .def("contains", [](const RatioSet& u, const std::string& t) {
            return u.contains(ExtRat::parse(t));
        })
        .def("unite", &RatioSet::unite)
        .def("intersect", &RatioSet::intersect)
        .def("complement", &RatioSet::complement)
        .def("subset_of", &RatioSet::subset_of)
        .def("is_admissible", &RatioSet::is_admissible)
        .def("__eq__", [](const RatioSet& a, const RatioSet& b) { return a == b; })
        .def("__str__", &RatioSet::str)
        .def("__repr__", [](const RatioSet& u) { return "RatioSet('" + u.str() + "')"; });

    m.def("ceva_check",
          [](const std::string& u12, const std::string& u23, const std::string& u13) {
              return verdict_dict(ceva_check(CevaInput{rs(u12), rs(u23), rs(u13)}));
          },
          py::arg("u12"), py::arg("u23"), py::arg("u13"));

    m.def("ceva_converse",
          [](const std::string& x, const std::string& y) {
              return ceva_converse_check(Rat::parse(x), Rat::parse(y));
          },
          py::arg("x"), py::arg("y"));

    m.def("ceva_search",
          [](const std::vector<std::string>& pool, unsigned long budget) {
              std::vector<ExtRat> p;
              for (const std::string& s : pool) p.push_back(ExtRat::parse(s));
              CevaSearchReport r = ceva_search(p, budget);
              py::dict d;
              d["total"] = r.total;
              d["hyps_hold"] = r.hyps_hold;
              d["conclusion_verified"] = r.conclusion_verified;
              d["failures"] = r.failures;
              d["inconsistencies"] = r.inconsistencies;
              d["partial"] = r.partial;
              return d;
          },
          py::arg("pool"), py::arg("budget") = 0);

    m.def("lemma43_check",
          [](const std::vector<std::string>& terms) {
              if (terms.size() != 6)
                  throw py::value_error("expected the six terms c12,c21,c23,c32,c13,c31");
              Lemma43Candidate c{parse_lterm(terms[0]), parse_lterm(terms[1]),
                                 parse_lterm(terms[2]), parse_lterm(terms[3]),
                                 parse_lterm(terms[4]), parse_lterm(terms[5])};
              Lemma43Verdict v = lemma43_check(c);
              py::dict d;
              d["pass_ii"] = v.pass_ii;
              d["pass_iii"] = v.pass_iii;
              d["pass_iv"] = v.pass_iv;
              d["failed"] = v.failed;
              d["witness"] = v.witness ? py::object(py::cast(rat_strs(*v.witness)))
                                       : py::object(py::none());
              return d;
          },
          py::arg("terms"));

    py::class_<FinDistLattice>(m, "Lattice")
        .def(py::init([](size_t ji, const std::vector<std::pair<size_t, size_t>>& covers) {
                 return FinDistLattice(JIPoset::from_covers(ji, covers));
             }),
             py::arg("ji"), py::arg("covers") = std::vector<std::pair<size_t, size_t>>{})
        .def_static("chain", &FinDistLattice::chain_lattice)
        .def_static("cube", &FinDistLattice::boolean_cube)
        .def_static("square_plus_zero", &FinDistLattice::square_plus_zero)
        .def("__len__", &FinDistLattice::size)
        .def("join", &FinDistLattice::join)
        .def("meet", &FinDistLattice::meet)
        .def("leq", &FinDistLattice::leq)
        .def("min_diff", &FinDistLattice::min_diff)
        .def("element_str", &FinDistLattice::elem_str)
        .def("completely_normal",
             [](const FinDistLattice& D) { return completely_normal(D).normal; })
        .def("cevian_solve",
             [](const FinDistLattice& D)
                 -> std::optional<std::vector<std::vector<size_t>>> {
                 std::optional<CevianTable> t = cevian_solve(D);
                 if (!t) return std::nullopt;
                 return t->op;
             });

    m.def("enumerate_lattices", [](size_t max_ji) {
        std::map<size_t, size_t> by_n;
        size_t normal = 0, total = 0;
        for (const JIPoset& p : enumerate_ji_posets(max_ji)) {
            ++by_n[p.n];
            ++total;
            normal += completely_normal(FinDistLattice(p)).normal;
        }
        py::dict d;
        d["by_ji_count"] = by_n;
        d["total"] = total;
        d["completely_normal"] = normal;
        return d;
    }, py::arg("max_ji"));

    m.def("diagram_d_commutative", [] { return check_D_commutative(); });
    m.def("idc_collapse", &check_idc_collapse);
    m.def("eta_naturality_failures",
          [](int depth) { return check_eta_naturality(depth).size(); },
          py::arg("depth") = 3);

    m.def("condensate",
          [](const std::vector<std::string>& atom_tags) {
              std::map<P3, uint32_t> scale;
              std::vector<P3> tags;
              for (const std::string& t : atom_tags) tags.push_back(parse_p3(t));
              for (P3 p : p3_all()) {
                  scale[p] = 0;
                  for (size_t a = 0; a < tags.size(); ++a)
                      if (p3_leq(p, tags[a])) scale[p] |= 1u << a;
              }
              PScaledBA A = make_pscaled(tags.size(), std::move(scale));
              DRestriction R = finite_restriction_of_D();
              Condensate C = tensor(A, R.diagram);
              py::dict d;
              std::vector<size_t> sizes;
              for (const FinDistLattice& f : C.factors) sizes.push_back(f.size());
              d["factor_sizes"] = sizes;
              d["size"] = C.size();
              return d;
          },
          py::arg("atom_tags"));

    m.def("cone_subset",
          [](const std::string& scenario_text) {
              Scenario s = parse_scenario(scenario_text);
              if (s.kind != "cone") throw py::value_error("expected a cone scenario");
              ConeScenario cs = scenario_cone(s);
              if (!cs.b) throw py::value_error("scenario lacks a region 'b'");
              SubsetResult sr = region_subset(cs.a, *cs.b);
              return py::make_tuple(sr.holds,
                                    sr.witness
                                        ? py::object(py::cast(rat_strs(*sr.witness)))
                                        : py::object(py::none()));
          },
          py::arg("scenario_text"));

    m.def("ceva_svg",
          [](const std::string& x, const std::string& y) {
              Rat rx = Rat::parse(x), ry = Rat::parse(y);
              return ceva_svg(rx, ry, RatioSet::initial(rx), RatioSet::initial(ry),
                              RatioSet::initial(rx * ry));
          },
          py::arg("x"), py::arg("y"));
}
