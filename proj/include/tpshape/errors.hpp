#ifndef TPSHAPE_ERRORS_HPP
#define TPSHAPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpshape {

/// Malformed input: parse failures, dimension mismatches, out-of-range
/// arguments.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A theorem was asked for but its hypotheses do not hold for the given
/// data. Nothing is asserted in that case.
class hypothesis_unmet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked theorem conclusion failed on concrete data. Either the claim
/// is false for this instance or there is a bug; the message carries the
/// evidence.
class falsified : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace tpshape

#endif
