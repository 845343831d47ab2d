// SPDX-License-Identifier: Apache-2.0
//
// ria-sim: retrospective interference alignment simulator for the K-user
// MISO interference channel with imperfect delayed CSIT
// Copyright (C) 2026 The ria-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RIA_OUTPUT_TABLE_HPP
#define RIA_OUTPUT_TABLE_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ria {

/// Comma-separated table: one header row, then data rows with the same
/// column count. Cells never contain commas, quotes or newlines.
class OutputTable {
public:
    explicit OutputTable(std::vector<std::string> header);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    std::size_t columns() const { return header_.size(); }

    void add_row(std::vector<std::string> row);
    void write_csv(std::ostream& os) const;

    bool operator==(const OutputTable&) const = default;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// 9 significant digits, '.' decimal separator, independent of locale.
std::string format_number(double value);

/// Tables separated by a single empty line.
void write_csv(std::ostream& os, std::span<const OutputTable> tables);
std::vector<OutputTable> parse_csv(std::istream& is);

} // namespace ria

#endif
