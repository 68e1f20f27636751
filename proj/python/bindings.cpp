#include "perfarr/association.hpp"
#include "perfarr/checkers.hpp"
#include "perfarr/constructions.hpp"
#include "perfarr/correlation.hpp"
#include "perfarr/io.hpp"
#include "perfarr/render.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace perfarr;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Backend parse_backend(const std::string& name) {
    if (name == "exact") return Backend::Exact;
    if (name == "fft") return Backend::Fft;
    throw std::invalid_argument("backend must be 'exact' or 'fft'");
}

} // namespace

PYBIND11_MODULE(_perfarr, m) {
    m.doc() = "perfect n-dimensional arrays over roots of unity";

    py::class_<ExponentArray>(m, "ExponentArray")
        .def(py::init<std::int64_t, Shape, std::vector<std::int64_t>>(),
             py::arg("modulus"), py::arg("shape"), py::arg("exponents"))
        .def_property_readonly("modulus", &ExponentArray::modulus)
        .def_property_readonly("shape", [](const ExponentArray& a) { return a.shape(); })
        .def_property_readonly("exponents",
                               [](const ExponentArray& a) {
                                   return std::vector<std::int64_t>(a.exponents().begin(),
                                                                    a.exponents().end());
                               })
        .def_property_readonly("volume", &ExponentArray::volume)
        .def("entry", &ExponentArray::entry, py::arg("index"))
        .def("flatten_row_major", &ExponentArray::flatten_row_major)
        .def("reshape", &ExponentArray::reshape, py::arg("shape"))
        .def("to_json", [](const ExponentArray& a) { return canonical_json(a); })
        .def("__eq__", [](const ExponentArray& a, const ExponentArray& b) { return a == b; })
        .def("__repr__", [](const ExponentArray& a) {
            return "<ExponentArray shape=" + std::to_string(a.dimensions()) + "d volume=" +
                   std::to_string(a.volume()) + " modulus=" + std::to_string(a.modulus()) + ">";
        });

    m.def("array_from_json",
          [](const std::string& text) { return array_from_json(nlohmann::json::parse(text)); },
          py::arg("text"));

    m.def("chu", &chu, py::arg("m"), py::arg("p") = 1);
    m.def("frank", &frank, py::arg("n"));
    m.def("milewski", &milewski, py::arg("m"), py::arg("k"), py::arg("p") = 1,
          py::arg("allow_k0") = false);
    m.def("blake_floor", &blake_floor, py::arg("m"), py::arg("n"), py::arg("k"));
    m.def("gfrank", &gfrank, py::arg("d"), py::arg("m"));
    m.def("gfrank_generator", &gfrank_generator, py::arg("d"), py::arg("m"));
    m.def("floor2d", &floor2d, py::arg("d"), py::arg("allow_odd") = false);
    m.def("floor_nd", &floor_nd, py::arg("d"), py::arg("m"), py::arg("allow_odd") = false);
    py::enum_<ChuVariant>(m, "ChuVariant")
        .value("TRIANGULAR", ChuVariant::Triangular)
        .value("QUADRATIC", ChuVariant::Quadratic);
    m.def("gmilewski", &gmilewski, py::arg("r"), py::arg("k"), py::arg("m"), py::arg("p") = 1,
          py::arg("allow_odd") = false, py::arg("variant") = ChuVariant::Triangular);
    m.def("gmilewski_generator", &gmilewski_generator, py::arg("r"), py::arg("k"), py::arg("m"),
          py::arg("p") = 1, py::arg("variant") = ChuVariant::Triangular);

    py::class_<AssociatedArray>(m, "AssociatedArray")
        .def_property_readonly("base", [](const AssociatedArray& a) { return a.base; })
        .def_property_readonly("split", [](const AssociatedArray& a) { return a.split; });
    m.def("associate", py::overload_cast<const ExponentArray&, std::int64_t>(&associate),
          py::arg("array"), py::arg("divisor"));
    m.def("associate_per_axis",
          py::overload_cast<const ExponentArray&, const std::vector<std::int64_t>&>(&associate),
          py::arg("array"), py::arg("divisors"));
    m.def("concatenate", &concatenate, py::arg("associated"));
    m.def("as_associated", &as_associated, py::arg("base"));
    m.def("subarray", &subarray, py::arg("associated"), py::arg("within"));

    py::class_<CorrelationTable>(m, "CorrelationTable")
        .def_property_readonly("shape", &CorrelationTable::shape)
        .def_property_readonly("backend",
                               [](const CorrelationTable& t) {
                                   return t.backend() == Backend::Exact ? "exact" : "fft";
                               })
        .def_property_readonly("values", &CorrelationTable::complex_values)
        .def("value", &CorrelationTable::value, py::arg("shift"))
        .def("nonzero_shifts", &CorrelationTable::nonzero_shifts)
        .def("to_json", [](const CorrelationTable& t) { return json_to_py(table_to_json(t)); });

    m.def("cross_correlation",
          [](const ExponentArray& a, const ExponentArray& b, const std::string& backend) {
              return cross_correlation(a, b, parse_backend(backend));
          },
          py::arg("a"), py::arg("b"), py::arg("backend") = "exact");
    m.def("autocorrelation",
          [](const ExponentArray& a, const std::string& backend) {
              return autocorrelation(a, parse_backend(backend));
          },
          py::arg("a"), py::arg("backend") = "exact");

    m.def("is_perfect",
          [](const ExponentArray& a) {
              const PerfectionResult r = is_perfect(a);
              return py::make_tuple(r.perfect,
                                    r.witness ? py::cast(*r.witness) : py::none().cast<py::object>());
          },
          py::arg("a"),
          "Exact perfection decision; returns (perfect, witness_shift_or_None).");

    m.def("aop_check",
          [](const ExponentArray& s, std::int64_t d) { return json_to_py(report_to_json(aop_check(s, d))); },
          py::arg("sequence"), py::arg("divisor"));
    m.def("gaop_check",
          [](const ExponentArray& a, std::int64_t d) { return json_to_py(report_to_json(gaop_check(a, d))); },
          py::arg("array"), py::arg("divisor"));
    m.def("verify_theorem_chain",
          [](const ExponentArray& a, std::int64_t d) {
              const TheoremChainReport chain = verify_theorem_chain(a, d);
              py::dict out;
              out["gaop"] = json_to_py(report_to_json(chain.gaop));
              out["array_perfect"] = chain.array_perfect.perfect;
              out["associated_perfect"] = chain.associated_perfect.perfect;
              out["implication_ok"] = chain.implication_ok;
              return out;
          },
          py::arg("array"), py::arg("divisor"));

    m.def("bench_correlation",
          [](const Shape& shape, std::int64_t modulus, int reps, std::int64_t cap) {
              return json_to_py(bench_to_json(bench_correlation(shape, modulus, reps, cap)));
          },
          py::arg("shape"), py::arg("modulus"), py::arg("repetitions") = 3,
          py::arg("volume_cap") = std::int64_t{1} << 22);

    m.def("render_image",
          [](const ExponentArray& a, const std::string& palette, std::int64_t scale,
             const std::string& format) {
              RenderSpec spec;
              if (palette == "grayscale") spec.palette = Palette::Grayscale;
              else if (palette == "hue") spec.palette = Palette::Hue;
              else throw std::invalid_argument("palette must be 'grayscale' or 'hue'");
              if (format == "pgm") spec.format = ImageFormat::Pgm;
              else if (format == "ppm") spec.format = ImageFormat::Ppm;
              else throw std::invalid_argument("format must be 'pgm' or 'ppm'");
              spec.scale = scale;
              return py::bytes(render_image(a, spec));
          },
          py::arg("array"), py::arg("palette") = "grayscale", py::arg("scale") = 1,
          py::arg("format") = "pgm");
}
