#ifndef SETLAT_IO_HPP
#define SETLAT_IO_HPP

#include "json.hpp"
#include <string>

#include "setlat/duality.hpp"
#include "setlat/solutions.hpp"

namespace setlat {

using Json = nlohmann::ordered_json;

/// Input rejection with a machine-readable code: SCHEMA_VIOLATION,
/// NUMBER_FORMAT, DIMENSION_MISMATCH, UPPER_SET_VIOLATION, IO_ERROR.
struct IoError : std::runtime_error {
    std::string code;
    IoError(std::string code_, const std::string& msg)
        : std::runtime_error(code_ + ": " + msg), code(std::move(code_)) {}
};

struct ProblemDocument {
    ProblemInstance inst;
    std::string f_builtin;  // set when f is a named builtin (e.g. "sec3")
    Json options;           // free-form, passed through to the commands
};

/// All numbers in documents are decimal strings ("%.17g") so canonical
/// files round-trip bit-for-bit across platforms.
std::string format_number(double v);
double parse_number(const Json& j, const std::string& where);

ProblemDocument parse_problem_text(const std::string& text);
ProblemDocument parse_problem(const std::string& path);
std::string emit_problem(const ProblemDocument& doc);

Json upper_set_json(const UpperSet& A);
Json strong_result_json(const StrongDualityResult& r);
Json saddle_verdict_json(const SaddleVerdict& v);

}  // namespace setlat

#endif
