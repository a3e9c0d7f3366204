/*
 * Copyright 2026 The fogfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOGFL_CSV_HPP_
#define FOGFL_CSV_HPP_

#include <ostream>
#include <string>

#include "fogfl/orchestrator.hpp"

namespace fogfl {

// Column order of every result file; see docs/csv_schema.md.
extern const char* const kCsvHeader;

void write_csv(const RunResult& r, std::ostream& out);
std::string to_csv(const RunResult& r);

}  // namespace fogfl

#endif  // FOGFL_CSV_HPP_
