// Copyright 2026 The sinksub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

namespace sinksub {

// Exit statuses of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification, audit or computation failure
inline constexpr int kExitUsage = 2;

// Verbs: nimseq, period, additive, verify, audit, scan, duality, render.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sinksub
