#include <pybind11/gil_safe_call_once.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "transit/commands.hpp"
#include "transit/document.hpp"
#include "transit/gds.hpp"
#include "transit/harness.hpp"
#include "transit/transitivity.hpp"

namespace py = pybind11;
using namespace transit;

namespace {

Ndds make_ndds(std::size_t points, const std::vector<std::vector<Point>>& maps, const std::vector<std::size_t>& prefix,
               const std::vector<std::size_t>& period, const std::string& metric) {
  FiniteSpace space = metric == "cyclic" ? FiniteSpace::cyclic(points) : FiniteSpace::discrete(points);
  if (metric != "cyclic" && metric != "discrete") throw Error(ErrorCode::ParseError, "metric must be discrete or cyclic");
  std::vector<FiniteMap> fam;
  for (const auto& m : maps) fam.emplace_back(m);
  return Ndds(std::move(space), std::move(fam), SequenceSpec{prefix, period});
}

py::dict record_dict(const Record& r) {
  py::dict d;
  d["property"] = r.property;
  d["variant"] = r.variant;
  d["verdict"] = r.verdict.to_string();
  d["witness"] = r.witness;
  d["note"] = r.note;
  return d;
}

CommandOptions options(const py::kwargs& kw) {
  CommandOptions o;
  for (auto item : kw) {
    auto key = py::cast<std::string>(item.first);
    auto val = item.second;
    if (key == "prop") o.prop = py::cast<std::string>(val);
    else if (key == "variant") o.variant = py::cast<std::string>(val);
    else if (key == "depth") o.depth = py::cast<std::size_t>(val);
    else if (key == "horizon") o.horizon = py::cast<std::size_t>(val);
    else if (key == "seed") o.seed = py::cast<std::uint64_t>(val);
    else if (key == "samples") o.samples = py::cast<std::size_t>(val);
    else if (key == "threads") o.threads = py::cast<unsigned>(val);
    else if (key == "set") o.set = py::cast<std::string>(val);
    else if (key == "kind") o.kind = py::cast<std::string>(val);
    else if (key == "point") o.point = py::cast<Point>(val);
    else if (key == "word") o.word = py::cast<std::string>(val);
    else if (key == "family_mode") o.family_mode = py::cast<std::string>(val);
    else if (key == "allow_imperfect") o.allow_imperfect = py::cast<bool>(val);
    else if (key == "allow_degenerate") o.allow_degenerate = py::cast<bool>(val);
    else if (key == "no_exhaustive") o.no_exhaustive = py::cast<bool>(val);
    else throw py::type_error("unknown option '" + key + "'");
  }
  return o;
}

}  // namespace

PYBIND11_MODULE(_transit, m) {
  m.doc() = "Transitivity, mixing and minimality checks for non-autonomous and generic dynamical systems";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<std::pair<py::object, py::object>> errors;
  errors.call_once_and_store_result([&] {
    py::object base = py::reinterpret_steal<py::object>(PyErr_NewException("transit.Error", PyExc_ValueError, nullptr));
    py::object doc =
        py::reinterpret_steal<py::object>(PyErr_NewException("transit.DocumentError", base.ptr(), nullptr));
    return std::pair{base, doc};
  });
  m.attr("Error") = errors.get_stored().first;
  m.attr("DocumentError") = errors.get_stored().second;
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DocumentError& e) {
      py::object inst = errors.get_stored().second(e.diagnostic());
      inst.attr("line") = e.line();
      inst.attr("column") = e.column();
      inst.attr("kind") = std::string(to_string(e.code()));
      PyErr_SetObject(errors.get_stored().second.ptr(), inst.ptr());
    } catch (const Error& e) {
      py::object inst = errors.get_stored().first(std::string(e.what()));
      inst.attr("kind") = std::string(to_string(e.code()));
      PyErr_SetObject(errors.get_stored().first.ptr(), inst.ptr());
    }
  });

  py::class_<Report>(m, "Report")
      .def_property_readonly("command", &Report::command)
      .def_property_readonly("records", [](const Report& r) {
        py::list l;
        for (const auto& rec : r.records()) l.append(record_dict(rec));
        return l;
      })
      .def_property_readonly("exit_code", &Report::exit_code)
      .def("all_pass", &Report::all_pass)
      .def("structured", &Report::structured)
      .def("table", &Report::table)
      .def("__repr__", [](const Report& r) {
        auto s = r.summary();
        return "<Report " + r.command() + " pass=" + std::to_string(s.pass) + " fail=" + std::to_string(s.fail) +
               " unknown=" + std::to_string(s.unknown) + ">";
      });

  py::class_<Ndds>(m, "Ndds")
      .def(py::init(&make_ndds), py::arg("points"), py::arg("maps"), py::arg("prefix") = std::vector<std::size_t>{},
           py::arg("period") = std::vector<std::size_t>{0}, py::arg("metric") = "discrete")
      .def_property_readonly("size", &Ndds::size)
      .def("iterate", [](const Ndds& s, std::size_t n) { return s.iterate(n).table(); })
      .def_property_readonly("preperiod", [](const Ndds& s) { return s.trace().preperiod(); })
      .def_property_readonly("cycle", [](const Ndds& s) { return s.trace().cycle(); })
      .def("__repr__", [](const Ndds& s) { return "<Ndds " + describe(s) + ">"; });

  m.def(
      "decide",
      [](const Ndds& s, const std::string& prop, const std::string& variant, bool allow_imperfect) {
        auto d = decide(s, parse_property(prop), variant, DecideOptions{allow_imperfect});
        return py::make_tuple(d.verdict.to_string(), d.witness);
      },
      py::arg("system"), py::arg("prop"), py::arg("variant") = "i", py::arg("allow_imperfect") = false,
      "Decide a property; returns (verdict, witness).");
  m.def(
      "equivalence_suite", [](const Ndds& s, const std::string& prop) { return equivalence_suite(s, parse_property(prop)); },
      py::arg("system"), py::arg("prop"));
  m.def("implication_lattice", &implication_lattice_check, py::arg("system"));
  m.def(
      "gds_decide",
      [](const Ndds& s, const std::string& prop, const std::string& mode, bool allow_degenerate) {
        auto f = associate(s, mode == "iterate" ? AssociationMode::Iterate : AssociationMode::Family);
        auto d = gds_decide(f, parse_gds_property(prop), GdsOptions{allow_degenerate});
        return py::make_tuple(d.verdict.to_string(), d.witness);
      },
      py::arg("system"), py::arg("prop"), py::arg("family_mode") = "family", py::arg("allow_degenerate") = false);

  m.def(
      "parse_document", [](const std::string& text) { return serialize(parse_document(text)); }, py::arg("text"),
      "Validate a system document; returns its canonical serialization.");
  m.def(
      "run",
      [](const std::string& command, const std::string& text, const py::kwargs& kw) {
        auto opt = options(kw);
        if (command == "cross-validate") return run_command(command, opt);
        return run_command(command, parse_document(text), opt);
      },
      py::arg("command"), py::arg("document") = "",
      "Run a command-line subcommand on document text; options as keyword arguments.");
  m.def(
      "cross_validate",
      [](std::uint64_t seed, std::size_t samples, bool exhaustive, unsigned threads) {
        HarnessOptions o;
        o.seed = seed;
        o.samples = samples;
        o.exhaustive = exhaustive;
        o.threads = threads;
        py::gil_scoped_release release;
        return cross_validate(o);
      },
      py::arg("seed") = 7, py::arg("samples") = 1000, py::arg("exhaustive") = true, py::arg("threads") = 0);
}
