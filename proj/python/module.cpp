#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <omega/codec.hpp>
#include <omega/engines.hpp>
#include <omega/identities.hpp>
#include <omega/numtheory.hpp>
#include <omega/render.hpp>

namespace py = pybind11;
using namespace omega;

namespace {

OmegaPoly compute(long long n, const PartitionSpec& spec, const std::string& engine) {
  return compute_omega(n, spec, engine_from_name(engine));
}

std::string render(const OmegaPoly& P, long long n, const std::string& format,
                   const std::string& notation) {
  const Notation nt =
      notation.empty() ? default_notation(P.spec()) : notation_from_name(notation);
  return render_omega(P, n, format_from_name(format), nt);
}

} // namespace

PYBIND11_MODULE(_omegapart, m) {
  m.doc() = "Exact polynomials characterizing restricted multicolor b-ary partitions";

  py::class_<PartitionSpec>(m, "PartitionSpec")
      .def(py::init<int, std::vector<int>>(), py::arg("base"), py::arg("lambdas"))
      .def_readonly("base", &PartitionSpec::base)
      .def_readonly("lambdas", &PartitionSpec::lambdas)
      .def_property_readonly("rho", &PartitionSpec::rho)
      .def_property_readonly("lambda_total", &PartitionSpec::lambda_total)
      .def(py::self == py::self);

  py::class_<OmegaPoly>(m, "OmegaPoly")
      .def_property_readonly("term_count", &OmegaPoly::term_count)
      .def("is_finished_form", &OmegaPoly::is_finished_form)
      .def("substitute_ZT", &OmegaPoly::substitute_ZT, py::arg("k"))
      .def("eval_all_ones",
           [](const OmegaPoly& P) {
             return P.eval(all_ones(P.spec()), all_ones(P.spec()))
                 .convert_to<long long>();
           })
      .def("render", &render, py::arg("n"), py::arg("format") = "plain",
           py::arg("notation") = "")
      .def(py::self == py::self)
      .def("__mul__", &OmegaPoly::operator*)
      .def("__add__", &OmegaPoly::operator+);

  m.def("compute", &compute, py::arg("n"), py::arg("spec"),
        py::arg("engine") = "recurrence");
  m.def("count", [](long long n, const PartitionSpec& spec) {
    return count_partitions(n, spec).convert_to<long long>();
  });
  m.def("count_series", [](long long n_max, const PartitionSpec& spec) {
    std::vector<long long> out;
    for (const auto& c : count_series(n_max, spec))
      out.push_back(c.convert_to<long long>());
    return out;
  });
  m.def("partitions", [](long long n, const PartitionSpec& spec) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_partitions(n, spec))
      out.push_back(render_partition(p));
    return out;
  });
  m.def(
      "decode",
      [](long long n, const PartitionSpec& spec, const std::string& notation) {
        const Notation nt =
            notation.empty() ? default_notation(spec) : notation_from_name(notation);
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const auto& [mono, coeff] : omega_recurrence(n, spec).terms()) {
          (void)coeff;
          pairs.emplace_back(render_monomial(mono, spec, Format::plain, nt),
                             render_partition(monomial_to_partition(mono, spec)));
        }
        return pairs;
      },
      py::arg("n"), py::arg("spec"), py::arg("notation") = "");

  m.def("check_functional_equation", &check_functional_equation, py::arg("spec"),
        py::arg("n_max"));
  m.def("uniform_color_count", [](long long n, int b, int rho) {
    return uniform_color_count(n, b, rho).convert_to<long long>();
  });
  m.def("factorization_j_range", [](const PartitionSpec& spec, int ell) {
    const JRange r = factorization_j_range(spec, ell);
    return py::make_tuple(r.lo, r.hi, r.all);
  });
  m.def(
      "check_factorization",
      [](long long n, int ell, long long j, const PartitionSpec& spec) {
        const FactorizationReport r = check_factorization(n, ell, j, spec);
        py::dict d;
        d["holds"] = r.holds;
        d["lhs"] = render(r.lhs, -1, "plain", "");
        d["rhs_left"] = render(r.rhs_left, -1, "plain", "");
        d["rhs_right"] = render(r.rhs_right, -1, "plain", "");
        return d;
      },
      py::arg("n"), py::arg("ell"), py::arg("j"), py::arg("spec"));

  m.def("is_in_Mb", &is_in_Mb, py::arg("k"), py::arg("b"));
  m.def("enumerate_Mb", &enumerate_Mb, py::arg("bound"), py::arg("b"));
  m.def("starred_multinomial", &starred_multinomial, py::arg("ks"), py::arg("b"));
  m.def("d_transform", [](unsigned long long k, int b, long long t) {
    return d_transform(k, b, t).convert_to<long long>();
  });
}
