#pragma once

#include <stdexcept>
#include <string>

namespace slec {

/// Malformed caller input: bad ids, unparsable files, violated preconditions.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized construction failed to meet its constraints within the retry budget.
class generation_error : public std::runtime_error {
public:
    explicit generation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Staged elimination steps were invoked out of order.
class sequencing_error : public std::logic_error {
public:
    explicit sequencing_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace slec
