#pragma once

#include <stdexcept>
#include <string>

namespace fxnet {

// Error categories map 1:1 onto the CLI exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;
inline constexpr int validation = 3;
inline constexpr int numeric = 4;
inline constexpr int io = 5;
}  // namespace exit_code

}  // namespace fxnet
