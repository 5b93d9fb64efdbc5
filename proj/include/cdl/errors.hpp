#pragma once

#include <stdexcept>
#include <string>

namespace cdl {

/// Malformed input file or formula.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A certifier contradicted a property the library promises to uphold.
/// Surfaced loudly: this is never recovered from silently.
struct falsification_error : std::logic_error {
    explicit falsification_error(const std::string& what) : std::logic_error(what) {}
};

struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cdl
