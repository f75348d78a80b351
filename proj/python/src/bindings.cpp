#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gradalg/cli.hpp"
#include "gradalg/errors.hpp"
#include "gradalg/io.hpp"

namespace py = pybind11;
using gradalg::io::json;

namespace {

struct RootOrderCap {
  int saved = gradalg::max_order();
  explicit RootOrderCap(int n) { gradalg::set_max_order(n); }
  ~RootOrderCap() { gradalg::set_max_order(saved); }
};

std::string normalize_scalar(const std::string& text, int max_root_order) {
  RootOrderCap cap(max_root_order);
  const auto c = gradalg::io::parse_scalar(json::parse(text), "", {max_root_order});
  return gradalg::io::scalar_to_json(c).dump();
}

py::tuple run(const std::string& command, const std::string& workspace, std::uint64_t seed, std::size_t samples,
              std::size_t exhaustive_dim, int max_root_order, std::optional<std::string> task,
              const std::string& args) {
  gradalg::cli::Options opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.exhaustive_dim = exhaustive_dim;
  opt.max_root_order = max_root_order;
  opt.task = std::move(task);
  opt.args = json::parse(args);
  RootOrderCap cap(max_root_order);
  const auto w = gradalg::io::load_workspace(json::parse(workspace), {max_root_order});
  gradalg::cli::Result r;
  {
    py::gil_scoped_release release;
    r = gradalg::cli::run_command(command, w, opt);
  }
  return py::make_tuple(gradalg::io::serialize(r.report), r.exit_code);
}

py::tuple cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"gradalg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = gradalg::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_gradalg, m) {
  auto base = py::register_exception<gradalg::Error>(m, "Error");
  py::register_exception<gradalg::SchemaError>(m, "SchemaError", base.ptr());
  py::register_exception<gradalg::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<gradalg::UnsupportedInput>(m, "UnsupportedInput", base.ptr());
  py::register_exception<gradalg::ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.attr("FORMAT_VERSION") = gradalg::io::kVersion;
  m.def("commands", &gradalg::cli::commands);
  m.def("is_query", &gradalg::cli::is_query);
  m.def("normalize_scalar", &normalize_scalar, py::arg("text"), py::arg("max_root_order") = 240);
  m.def("run", &run, py::arg("command"), py::arg("workspace"), py::arg("seed") = 0, py::arg("samples") = 64,
        py::arg("exhaustive_dim") = 4, py::arg("max_root_order") = 240, py::arg("task") = py::none(),
        py::arg("args") = "{}");
  m.def("cli", &cli, py::arg("args"));
}
