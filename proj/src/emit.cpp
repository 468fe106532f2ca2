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

#include "infosens/emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "infosens/errors.hpp"

namespace infosens {
namespace {

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

OutputFormat format_from_string(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + name + "'");
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, const RunInfo& info) {
  out << "mode,N,M,quantity,mean_nats,stderr_nats,seed,mc_samples\n";
  for (const auto& r : rows) {
    out << r.mode << ',' << r.n << ',';
    if (r.m) out << *r.m;
    out << ',' << r.quantity << ',' << real(r.value.mean) << ',' << real(r.value.se) << ','
        << info.seed << ',' << info.mc_samples << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows, const RunInfo& info) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["mode"] = r.mode;
    o["N"] = r.n;
    o["M"] = r.m ? nlohmann::ordered_json(*r.m) : nlohmann::ordered_json(nullptr);
    o["quantity"] = r.quantity;
    o["mean_nats"] = r.value.mean;
    o["stderr_nats"] = r.value.se;
    o["seed"] = info.seed;
    o["mc_samples"] = info.mc_samples;
    arr.push_back(std::move(o));
  }
  out << arr.dump(2) << '\n';
}

void emit(const std::vector<SweepRow>& rows, const std::string& path, OutputFormat format,
          const RunInfo& info) {
  auto write = [&](std::ostream& out) {
    if (format == OutputFormat::kCsv) {
      write_csv(out, rows, info);
    } else {
      write_json(out, rows, info);
    }
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace infosens
