#pragma once

#include <stdexcept>
#include <string>

namespace gaidec {

// An input failed a documented precondition or schema check.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration or solver refused to start (or stopped) because the
// configured work budget would be exceeded. The message states the budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A postcondition that the library verifies on its own output failed.
// Seeing this means a defect in the library, not in the caller's input.
struct InternalCheckError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace gaidec
