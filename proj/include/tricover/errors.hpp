#pragma once

#include <stdexcept>
#include <string>

namespace tricover {

// Error categories shared across the toolkit. Callers (tests, CLI, bindings)
// dispatch on the code, never on message text.
enum class errc {
    range,
    malformed_edge,
    duplicate_edge,
    unsupported_degree_order,
    too_few_vertices,
    too_large,
    f_too_large,
    precondition_violated,
    bad_arguments,
    parse,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message);
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

} // namespace tricover
