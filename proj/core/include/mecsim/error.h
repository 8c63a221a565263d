// Copyright 2026 The mecsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MECSIM_ERROR_H_
#define MECSIM_ERROR_H_

#include <stdexcept>
#include <string>

namespace mecsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration value is out of range or could not be parsed.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// A PRB association table disagrees with the offloading decision.
class InconsistentTables : public Error {
 public:
  using Error::Error;
};

class ZeroRate : public Error {
 public:
  using Error::Error;
};

class EmptyOffloadSet : public Error {
 public:
  using Error::Error;
};

// The per-UE deadline caps cannot be met with the server capacity.
class InfeasibleAllocation : public Error {
 public:
  using Error::Error;
};

}  // namespace mecsim

#endif  // MECSIM_ERROR_H_
