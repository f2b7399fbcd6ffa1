#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

/// Malformed or non-admissible input (bad polygon file, non-primitive vertex, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition on the singularity structure failed, e.g. the classifier was
/// handed a polygon whose fan has zero or several non-basic cones.
class singularity_count_error : public std::invalid_argument {
public:
    singularity_count_error(std::size_t count, const std::string& what)
        : std::invalid_argument(what), count_(count) {}

    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

/// Two independent computations disagreed. Always a bug, never bad input.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace toric
