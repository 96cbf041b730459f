// Copyright 2026 The tspqaoa Authors
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

#ifndef TSPQAOA_CORE_SVG_H
#define TSPQAOA_CORE_SVG_H

#include <string>
#include <utility>
#include <vector>

namespace tspqaoa {

struct ChartSeries {
  std::string label;
  std::vector<std::pair<double, double>> points; // (x, y), drawn in order
};

// Self-contained static SVG line chart; output bytes depend only on the
// inputs so charts are diffable in tests.
void write_line_chart(const std::string &path, const std::string &title,
                      const std::string &x_label, const std::string &y_label,
                      const std::vector<ChartSeries> &series);

} // namespace tspqaoa

#endif
