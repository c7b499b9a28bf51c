/*
 * Copyright 2026 the hopfforge authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace hopfforge {

enum class ErrorKind {
    Parse,        // malformed input file or string
    Invalid,      // precondition violated (bad tuple, non-prime p, ...)
    ExtendField,  // computation needs a larger field; min_degree carries the answer
    Budget,       // enumeration budget exceeded
    NotApplicable,// operation's hypotheses do not hold for this input
    Internal      // invariant failed inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg, int min_degree = 0)
        : std::runtime_error(std::move(msg)), kind(kind), min_degree(min_degree) {}

    ErrorKind kind;
    // For ExtendField: the minimal extension degree (over the prime field)
    // in which the failed operation would succeed.
    int min_degree;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg, int min_degree = 0) {
    throw Error(kind, msg, min_degree);
}

} // namespace hopfforge
