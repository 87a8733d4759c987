#pragma once

#include <stdexcept>
#include <string>

namespace kalu {

// Bad user input: malformed data, vectors outside the lattice, or an
// operation invoked outside its domain.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: the arithmetic contradicted something the
// theory guarantees. Always a bug, never a usage problem.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kalu
