#pragma once

#include <stdexcept>

namespace wellconn {

// Violation of a guarantee the library maintains internally. Seeing one of
// these means a bug, not bad input.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed instance text. Semantic problems (out-of-range coordinate,
// duplicate string, arity below 2) raise std::invalid_argument instead.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wellconn
