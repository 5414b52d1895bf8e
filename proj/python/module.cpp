#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "purepoly/commands.hpp"
#include "purepoly/parse.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_purepoly, m) {
    m.doc() = "Polynomial purity, iteration and factorization tools";

    static py::exception<purepoly::Error> error(m, "PurepolyError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const purepoly::Error& e) {
            // message is the error JSON so the Python side can recover kind and details
            py::set_error(error, purepoly::error_json(e).dump().c_str());
        }
    });

    m.def(
        "run",
        [](const std::string& op, const purepoly::Args& args) {
            purepoly::Json out;
            {
                py::gil_scoped_release release;
                out = purepoly::run_operation(op, args);
            }
            return out.dump();
        },
        py::arg("op"), py::arg("args"), "Run an operation; returns its JSON result as text.");
    m.def("operations", &purepoly::operation_names);
    m.def("canonical", [](const std::string& text) { return purepoly::parse_poly(text).to_string(); },
          py::arg("poly"));
}
