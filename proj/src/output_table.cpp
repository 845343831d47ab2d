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

#include "ria/output_table.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace ria {

namespace {

void check_cell(std::string_view cell) {
    if (cell.find_first_of(",\"\r\n") != std::string_view::npos)
        throw std::invalid_argument("table cell contains a reserved character");
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(line.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return cells;
}

void write_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) os << ',';
        os << cells[k];
    }
    os << '\n';
}

} // namespace

OutputTable::OutputTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) throw std::invalid_argument("table needs at least one column");
    for (const auto& c : header_) check_cell(c);
}

void OutputTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size())
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                    std::to_string(header_.size()) + " columns");
    for (const auto& c : row) check_cell(c);
    rows_.push_back(std::move(row));
}

void OutputTable::write_csv(std::ostream& os) const {
    write_line(os, header_);
    for (const auto& row : rows_) write_line(os, row);
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    std::string s(buf);
    // a non-C numeric locale may print a decimal comma
    for (char& ch : s)
        if (ch == ',') ch = '.';
    return s;
}

void write_csv(std::ostream& os, std::span<const OutputTable> tables) {
    for (std::size_t k = 0; k < tables.size(); ++k) {
        if (k) os << '\n';
        tables[k].write_csv(os);
    }
}

std::vector<OutputTable> parse_csv(std::istream& is) {
    std::vector<OutputTable> tables;
    bool in_table = false;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) {
            in_table = false;
            continue;
        }
        auto cells = split_line(line);
        if (!in_table) {
            tables.emplace_back(std::move(cells));
            in_table = true;
        } else {
            tables.back().add_row(std::move(cells));
        }
    }
    return tables;
}

} // namespace ria
