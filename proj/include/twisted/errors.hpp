#pragma once

#include <stdexcept>
#include <string>

namespace twisted {

// Requested structure exceeds the configured size bounds.  The default
// bounds keep every exhaustive scan at desk scale; the TWISTED_MAX_N
// environment variable raises the ground-set cap for both group models.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity the implementation relies on failed to hold at
// runtime.  Seeing this exception indicates a bug, never bad input.
class invariant_error : public std::logic_error {
public:
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

// Lookup of an element that is not part of the queried structure.
class not_found_error : public std::out_of_range {
public:
    explicit not_found_error(const std::string& what) : std::out_of_range(what) {}
};

// Operation asked of a group model that does not support it.
class unsupported_model_error : public std::invalid_argument {
public:
    explicit unsupported_model_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace twisted
