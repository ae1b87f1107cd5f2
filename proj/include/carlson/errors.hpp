#pragma once
#include <stdexcept>
#include <string>

namespace carlson {

// Arguments outside the function's domain, or a tolerance outside its window.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An iteration cap was hit before the stopping rule was satisfied.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace carlson
