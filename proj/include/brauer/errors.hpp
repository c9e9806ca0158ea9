#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Base class for all engine errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input that does not satisfy a documented format or basic validity rule
/// (non-bijective generator, composite "prime", bad schema, ...).
struct malformed_input_error : error {
    using error::error;
};

/// A declared operation precondition was violated by the caller.
struct precondition_error : error {
    using error::error;
};

/// A configured resource cap was exceeded; the message names the cap.
struct resource_error : error {
    using error::error;
};

/// An internal consistency check failed (orthogonality violation, missing
/// defect class, ...).  Never silent: indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

/// A value that must be an algebraic integer had a denominator divisible
/// by the reduction prime.
struct nonintegral_error : error {
    using error::error;
};

/// A corpus entry failed one of its pinned expected facts on load.
struct corpus_integrity_error : error {
    using error::error;
};

} // namespace brauer
