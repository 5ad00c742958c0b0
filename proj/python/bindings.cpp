#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "steinhaus/cli.hpp"
#include "steinhaus/json_io.hpp"

namespace py = pybind11;

using namespace steinhaus;
using jsonio::Json;

namespace {

// nlohmann json -> native Python objects, so every report crosses the
// boundary in the same schema the CLI emits.
py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::object fraction(const Rational& q) {
    py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(boost::multiprecision::numerator(q).str() + "/" +
                    boost::multiprecision::denominator(q).str());
}

py::object witness_terms(const std::optional<sos::SquaresWitness>& w) {
    if (!w) return py::none();
    py::list out;
    for (auto t : w->terms) out.append(py::int_(t));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sum-of-squares oracles and exact quadratic-form checks behind "
              "the Steinhaus tiling obstruction";

    py::register_exception<FormError>(m, "FormError");

    m.def("four_power_obstruction",
          [](long long n) -> py::object {
              auto o = sos::four_power_obstruction(n);
              if (!o) return py::none();
              return py::make_tuple(o->nu, o->k);
          },
          py::arg("n"), "Return (nu, k) with n = 4**nu * (8*k + 7), or None.");
    m.def("decompose_two_squares",
          [](long long n) { return witness_terms(sos::decompose_two_squares(n)); },
          py::arg("n"));
    m.def("decompose_three_squares",
          [](long long n) { return witness_terms(sos::decompose_three_squares(n)); },
          py::arg("n"));
    m.def("decompose_four_squares",
          [](long long n) { return witness_terms(sos::decompose_four_squares(n)); },
          py::arg("n"));
    m.def("is_sum_of_d_squares", &sos::is_sum_of_d_squares, py::arg("n"), py::arg("d"));

    py::class_<forms::QuadForm>(m, "QuadForm")
        .def(py::init([](const std::vector<std::vector<long long>>& g) {
                 return forms::make_form(g);
             }),
             py::arg("twice_gram"), "Validate and wrap G = 2B.")
        .def_static("diagonal", &forms::diagonal_form, py::arg("b_diagonal"))
        .def_static("builtin", &forms::builtin_form, py::arg("d"))
        .def_property_readonly("dim", &forms::QuadForm::dim)
        .def("twice_gram",
             [](const forms::QuadForm& f) {
                 std::vector<std::vector<long long>> g(f.dim(),
                                                       std::vector<long long>(f.dim()));
                 for (int i = 0; i < f.dim(); ++i)
                     for (int j = 0; j < f.dim(); ++j) g[i][j] = f.twice_gram(i, j);
                 return g;
             })
        .def("evaluate",
             [](const forms::QuadForm& f, const std::vector<long long>& x) {
                 return forms::evaluate(f, x);
             },
             py::arg("x"))
        .def("determinant",
             [](const forms::QuadForm& f) { return fraction(forms::determinant(f)); })
        .def("characteristic_polynomial",
             [](const forms::QuadForm& f) {
                 py::list out;
                 for (const auto& c : forms::characteristic_polynomial(f).coefficients)
                     out.append(fraction(c));
                 return out;  // ascending powers of lambda
             })
        .def("extend_with_identity", &forms::extend_with_identity, py::arg("d_target"))
        .def("is_proven", &forms::is_proven_form);

    m.def("integer_square_root",
          [](long long num, long long den) -> py::object {
              auto r = forms::integer_square_root(Rational(num, den));
              if (!r) return py::none();
              return py::int_(r->convert_to<long long>());
          },
          py::arg("num"), py::arg("den") = 1);

    m.def("check_form_range",
          [](const forms::QuadForm& form, long long radius, int jobs) {
              return json_to_py(jsonio::to_json(qualify::check_form_range(form, radius, jobs)));
          },
          py::arg("form"), py::arg("box_radius"), py::arg("jobs") = 1);
    m.def("tiling_level",
          [](const forms::QuadForm& form) {
              return json_to_py(jsonio::to_json(qualify::tiling_level(form)));
          },
          py::arg("form"));
    m.def("scan_form",
          [](const forms::QuadForm& form, long long radius, int jobs) {
              return json_to_py(jsonio::to_json(qualify::scan_form(form, radius, jobs)));
          },
          py::arg("form"), py::arg("box_radius"), py::arg("jobs") = 1);
    m.def("verify_ternary_theorem",
          [](long long radius, int jobs) {
              return json_to_py(jsonio::to_json(qualify::verify_ternary_theorem(radius, jobs)));
          },
          py::arg("box_radius"), py::arg("jobs") = 1);
    m.def("verify_residue_claims", []() {
        py::list out;
        for (const auto& claim : qualify::verify_residue_claims())
            out.append(json_to_py(jsonio::to_json(claim)));
        return out;
    });
    m.def("cholesky_basis", &qualify::cholesky_basis, py::arg("form"),
          py::arg("tol") = 1e-12);

    m.def("gram_of",
          [](long long a, long long b, long long c, long long d) {
              auto g = planar::gram_of({a, b, c, d});
              return py::make_tuple(g.e11, g.e12, g.e22);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
          "Gram entries (a^2+b^2, ac+bd, c^2+d^2) of the columns (a,b),(c,d).");
    m.def("verify_det_identity",
          [](std::array<long long, 4> m1, std::array<long long, 4> m2) {
              return planar::verify_det_identity({m1[0], m1[1], m1[2], m1[3]},
                                                 {m2[0], m2[1], m2[2], m2[3]});
          },
          py::arg("m1"), py::arg("m2"));
    m.def("find_linear_sos",
          [](long long c2, long long c1, long long c0) {
              py::list out;
              for (const auto& p : planar::find_linear_sos({c2, c1, c0}))
                  out.append(py::make_tuple(p.alpha, p.beta, p.gamma, p.delta));
              return out;
          },
          py::arg("c2"), py::arg("c1"), py::arg("c0"));
    m.def("check_binary_form",
          [](const forms::QuadForm& form, long long t_bound) {
              return json_to_py(jsonio::to_json(planar::check_binary_form(form, t_bound)));
          },
          py::arg("form"), py::arg("t_bound"));
    m.def("gram_equivalent",
          [](std::array<long long, 4> m, std::array<long long, 3> rot, bool swap_rows,
             bool negate_first, bool negate_second) -> py::object {
              auto out = planar::gram_equivalent(
                  {m[0], m[1], m[2], m[3]}, {rot[0], rot[1], rot[2]},
                  {swap_rows, negate_first, negate_second});
              if (!out) return py::none();
              return py::make_tuple(out->a, out->b, out->c, out->d);
          },
          py::arg("m"), py::arg("rotation"), py::arg("swap_rows") = false,
          py::arg("negate_first") = false, py::arg("negate_second") = false);

    m.def("search_diagonal_ternary",
          [](long long max_coeff, long long radius, int jobs) {
              py::list out;
              for (const auto& r : search::search_diagonal_ternary(max_coeff, radius, jobs))
                  out.append(json_to_py(jsonio::to_json(r)));
              return out;
          },
          py::arg("max_coeff"), py::arg("box_radius"), py::arg("jobs") = 1);

    m.def("run_cli", [](const std::vector<std::string>& argv) {
        std::ostringstream out, err;
        int code = cli::run_cli(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });

    m.attr("__version__") = cli::kVersion;
}
