// Copyright 2026 The Distract Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISTRACT_CLI_H_
#define DISTRACT_CLI_H_

// Command-line front end. Subcommands:
//
//   passivize       --input --output [--reversals] [--seed] [--workers]
//   person-reverse  --input --output [--seed] [--workers]
//   birthday        --input --output [--seed] [--workers] [--reference-year]
//                   [--min-birth-year] [--max-birth-year]
//   label-fever     --claims --retrieved --output
//   evaluate        --gold --pred [--output]
//   class-weights   --input [--output]
//
// Generation subcommands also write `<output>.stats.json`. Exit status is
// 0 on success, 1 on bad input data and 2 on usage errors.

#include <ostream>
#include <string>
#include <vector>

namespace distract {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace distract

#endif  // DISTRACT_CLI_H_
