#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgrass/borelweil.hpp"
#include "qgrass/calculus.hpp"
#include "qgrass/commands.hpp"
#include "qgrass/comodules.hpp"
#include "qgrass/minors.hpp"
#include "qgrass/twisted.hpp"

namespace py = pybind11;
using namespace qgrass;

namespace {

std::map<std::pair<int, int>, std::string> form_dict(const FormVector& v) {
  std::map<std::pair<int, int>, std::string> out;
  for (const auto& [k, p] : v.components()) out[k] = p.to_string();
  return out;
}

Holo holo_of(const std::string& op) {
  if (op == "dbar") return Holo::Dbar;
  if (op == "del") return Holo::Del;
  throw std::invalid_argument("op must be 'dbar' or 'del'");
}

std::optional<IntRange> range_of(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return IntRange::parse(*s);
}

}  // namespace

PYBIND11_MODULE(_qgrass, m) {
  m.doc() = "Exact computations in quantum matrix algebras and quantum Grassmannians";

  m.def("normal_form", [](int n, const std::string& expr) { return NCPoly::parse(n, expr).to_string(); },
        py::arg("n"), py::arg("expr"));
  m.def("product", [](int n, const std::string& a, const std::string& b) {
    return mul(NCPoly::parse(n, a), NCPoly::parse(n, b)).to_string();
  });
  m.def("qdet", [](int n) { return qdet(n).to_string(); });
  m.def("minor", [](int n, const std::vector<int>& I, const std::vector<int>& J) {
    return minor(n, IndexSet(I), IndexSet(J)).to_string();
  });
  m.def("dbar", [](int n, int r, const std::string& expr) { return form_dict(dbar(NCPoly::parse(n, expr), r)); });
  m.def("del_", [](int n, int r, const std::string& expr) { return form_dict(del(NCPoly::parse(n, expr), r)); });
  m.def("hk_first_order_dim", &hk_first_order_dim, py::arg("n"), py::arg("r"));
  m.def("dim_formula", &dim_formula, py::arg("r"), py::arg("k"), py::arg("n"));
  m.def("count_ssyt", [](int r, int k, int n) { return enumerate_ssyt(r, k, n).size(); });
  m.def(
      "h0_dim",
      [](int n, int r, int k, const std::string& op, int jobs) {
        KernelOptions o;
        o.jobs = jobs;
        return h0(bundle_span(n, r, k, k == 0 ? 1 : 0), holo_of(op), o).dim;
      },
      py::arg("n"), py::arg("r"), py::arg("k"), py::arg("op") = "dbar", py::arg("jobs") = 1);
  m.def(
      "ladder_witness",
      [](int n, int r, const std::string& p, int max_total) { return to_json(verify_ladder_witness(n, r, p, max_total)).dump(); },
      py::arg("n"), py::arg("r"), py::arg("p"), py::arg("max_total") = 4);
  m.def("commands", &command_names);
  m.def(
      "run",
      [](const std::string& command, std::optional<std::string> n, std::optional<std::string> r,
         std::optional<int> k_max, std::optional<int> max_deg, bool prescreen, std::uint64_t seed, int jobs) {
        CheckConfig c;
        c.n = range_of(n);
        c.r = range_of(r);
        c.k_max = k_max;
        c.max_deg = max_deg;
        c.mode = prescreen ? RunMode::Prescreen : RunMode::Exact;
        c.seed = seed;
        c.jobs = jobs;
        RunOutcome out;
        {
          py::gil_scoped_release nogil;
          out = run(command, c);
        }
        return out.report.dump();
      },
      py::arg("command"), py::arg("n") = py::none(), py::arg("r") = py::none(), py::arg("k_max") = py::none(),
      py::arg("max_deg") = py::none(), py::arg("prescreen") = false, py::arg("seed") = 1, py::arg("jobs") = 1);
}
