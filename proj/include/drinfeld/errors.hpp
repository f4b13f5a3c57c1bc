/*
   Copyright 2026 The drinfeld-al Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DRINFELD_ERRORS_HPP
#define DRINFELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Violated precondition or malformed input.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (recompression residual, Galois residue,
/// backend disagreement). The CLI maps this to exit code 3.
class InconsistencyError : public Error {
   public:
    using Error::Error;
};

}  // namespace drinfeld

#endif
