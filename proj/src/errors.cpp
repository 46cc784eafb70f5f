#include "tricover/errors.hpp"

namespace tricover {

const char* errc_name(errc c) {
    switch (c) {
    case errc::range: return "RangeError";
    case errc::malformed_edge: return "MalformedEdge";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::unsupported_degree_order: return "UnsupportedDegreeOrder";
    case errc::too_few_vertices: return "TooFewVertices";
    case errc::too_large: return "TooLarge";
    case errc::f_too_large: return "FTooLarge";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::bad_arguments: return "BadArguments";
    case errc::parse: return "ParseError";
    }
    return "Error";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

} // namespace tricover
