// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <stdexcept>

namespace pepin {

// Malformed input (file format, stream contents). CLI exit code 1.
class ParseError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

// Invalid parameters or infeasible requests. CLI exit code 2.
class ParamError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

// Violated internal invariant; never expected on valid inputs. CLI exit code 3.
class InternalError : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

}  // namespace pepin
