// Copyright 2026 The OntoMesh Authors
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

#ifndef ONTOMESH_REPORT_RENDER_H_
#define ONTOMESH_REPORT_RENDER_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ontomesh/report.h"

namespace ontomesh {

enum class ReportFormat { kMarkdown, kCanonicalJson };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

std::string RenderReportMarkdown(const AnalysisReport& report);
std::string RenderReport(const AnalysisReport& report, ReportFormat format);
std::size_t WriteReport(const AnalysisReport& report, const std::filesystem::path& out,
                        ReportFormat format);

}  // namespace ontomesh

#endif  // ONTOMESH_REPORT_RENDER_H_
