// Copyright 2026 The tiergae Authors.
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

#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "tiergae/pubchem.hpp"

namespace tiergae {

struct CliDeps {
  Transport transport;
  std::chrono::milliseconds politeness_delay{250};
};

// tiergae fetch|ingest|train|embed. args excludes the program name.
// Returns the process exit code: 0 on success, 1 on failure, 2 on usage
// errors.
int run_cli(const std::vector<std::string>& args, const CliDeps& deps, std::ostream& out,
            std::ostream& err);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace tiergae
