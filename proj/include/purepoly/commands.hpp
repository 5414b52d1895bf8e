#pragma once

#include <map>
#include <string>
#include <vector>

#include "purepoly/errors.hpp"
#include "purepoly/serialize.hpp"

namespace purepoly {

/// Named string arguments of an operation, e.g. {"poly": "x^4+4", "prime": "2"}.
/// List-valued arguments (several polynomials, exponent sets) are separated by ';'.
using Args = std::map<std::string, std::string>;

/// Malformed or missing arguments.
class UsageError : public Error {
   public:
    using Error::Error;
    const char* kind() const noexcept override { return "UsageError"; }
};

/// Operations understood by run_operation, with their sub-operations where applicable.
const std::vector<std::string>& operation_names();

/// Dispatches one operation and returns its JSON result. Throws UsageError for bad arguments
/// and the library's domain errors otherwise.
Json run_operation(const std::string& op, const Args& args);

/// JSON document for a failed operation: {"error": {"kind", "message", ...}}.
Json error_json(const Error& e);

/// One "path: value" line per scalar leaf; arrays of scalars stay on one line.
std::string render_text(const Json& j);

/// Splits a ';'-separated list, trimming blanks.
std::vector<std::string> split_list(const std::string& text);

}  // namespace purepoly
