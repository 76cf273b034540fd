#ifndef OHBA_ERROR_HPP
#define OHBA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ohba {

// Malformed external input (graph files, list files, CLI arguments).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

// A precondition of an operation is violated (bad parameters).
class ParamError : public std::runtime_error {
public:
    explicit ParamError(const std::string& m) : std::runtime_error(m) {}
};

// An exact search refuses to run past its stated budget.  The message names
// the exceeded limit and, where meaningful, the best partial result found.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace ohba

#endif
