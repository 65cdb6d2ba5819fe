#pragma once

#include <stdexcept>
#include <string>

namespace solstor {

// Input data or configuration violated a contract (CLI exit code 1).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No feasible portfolio within the search bounds (CLI exit code 2).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File system / parsing trouble unrelated to domain rules (CLI exit code 3).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace solstor
