/*
 * Copyright 2026 The graphcake authors
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

namespace graphcake {

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// Query-layer errors.  Protocols in this engine never issue an
// unsatisfiable cut on purpose, so these indicate a bug in the caller.
struct BadRange : Error { using Error::Error; };
struct Unsatisfiable : Error { using Error::Error; };
struct TauOutOfRange : Error { using Error::Error; };

// Procedure preconditions.
struct MTooLarge : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// Protocol / instance shape preconditions.
struct WrongShape : Error { using Error::Error; };
struct NotALine : WrongShape { using WrongShape::WrongShape; };
struct NotATree : WrongShape { using WrongShape::WrongShape; };
struct BadShapeParams : Error { using Error::Error; };

// Verifier precondition.
struct IncompleteAllocation : Error { using Error::Error; };

// Malformed value data.
struct BadValuation : Error { using Error::Error; };

}  // namespace graphcake
