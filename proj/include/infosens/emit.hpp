// Copyright 2026 The Infosens Authors. All Rights Reserved.
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

#ifndef INFOSENS_EMIT_HPP_
#define INFOSENS_EMIT_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "infosens/harness.hpp"

namespace infosens {

enum class OutputFormat { kCsv, kJson };

OutputFormat format_from_string(const std::string& name);

struct RunInfo {
  std::uint64_t seed = 0;
  int mc_samples = 0;
};

/// Header: mode,N,M,quantity,mean_nats,stderr_nats,seed,mc_samples. M is
/// empty for single-task rows. Reals are printed with 17 significant digits.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const RunInfo& info);

/// An array of objects with the CSV column names as keys; M is null when
/// absent.
void write_json(std::ostream& out, const std::vector<SweepRow>& rows, const RunInfo& info);

/// Writes to `path`, or to stdout when the path is empty or "-". Throws
/// IoError when the file cannot be written.
void emit(const std::vector<SweepRow>& rows, const std::string& path, OutputFormat format,
          const RunInfo& info);

}  // namespace infosens

#endif  // INFOSENS_EMIT_HPP_
