#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fsplit/api.hpp"

namespace py = pybind11;
using namespace fsplit;

namespace {

CommandOptions options_for(std::optional<std::uint64_t> budget, bool oracle) {
  CommandOptions opts;
  opts.compute = ComputeOptions::from_environment();
  if (budget) opts.compute.budget = *budget;
  opts.oracle = oracle;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_fsplit, m) {
  m.doc() = "Frobenius splitting numbers over F_p and F_p(t...)";

  static py::handle error_type = py::exception<Error>(m, "FsplitError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(error_kind_name(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.attr("SCHEMA") = kSchema;

  m.def(
      "se",
      [](const std::string& spec, unsigned e, std::optional<std::uint64_t> budget, bool oracle) {
        return run_se(parse_ring_spec(spec), e, options_for(budget, oracle)).dump();
      },
      py::arg("spec"), py::arg("e"), py::arg("budget") = py::none(), py::arg("oracle") = false);

  m.def(
      "signature",
      [](const std::string& spec, unsigned e_max, std::optional<std::uint64_t> budget) {
        const RingSpec parsed = parse_ring_spec(spec);
        try {
          return run_signature(parsed, e_max, options_for(budget, false)).dump();
        } catch (const SignatureCostGuard& g) {
          return partial_signature(parsed, g).dump();
        }
      },
      py::arg("spec"), py::arg("e_max"), py::arg("budget") = py::none());

  m.def(
      "probe",
      [](const std::string& spec, std::optional<std::string> primes, std::vector<std::string> chains, unsigned e,
         const std::string& thresholds, std::optional<std::uint64_t> budget) {
        return run_probe(parse_ring_spec(spec), primes, chains, e, parse_thresholds(thresholds),
                         options_for(budget, false))
            .dump();
      },
      py::arg("spec"), py::arg("primes") = py::none(), py::arg("chains") = std::vector<std::string>{},
      py::arg("e") = 1, py::arg("thresholds") = "0,1/2,1", py::arg("budget") = py::none());

  m.def(
      "gorenstein",
      [](const std::string& spec, std::optional<std::string> sop, std::optional<std::string> socle, unsigned e,
         std::optional<std::uint64_t> budget) {
        return run_gorenstein(parse_ring_spec(spec), sop, socle, e, options_for(budget, false)).dump();
      },
      py::arg("spec"), py::arg("sop") = py::none(), py::arg("socle") = py::none(), py::arg("e") = 1,
      py::arg("budget") = py::none());
}
