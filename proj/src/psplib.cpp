// Copyright 2026 The msrcpspr Authors
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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "msrcpspr/errors.hpp"
#include "msrcpspr/instance.hpp"

namespace msrcpspr {
namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool is_rule(std::string_view line) {
  line = trim(line);
  return !line.empty() && (line.front() == '*' || line.front() == '-') &&
         line.find_first_not_of(line.front()) == std::string_view::npos;
}

std::vector<int> read_ints(std::string_view line, int line_no) {
  std::vector<int> values;
  std::istringstream is{std::string(line)};
  std::string token;
  while (is >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("expected integer, found '" + token + "'", line_no);
    values.push_back(value);
  }
  return values;
}

// Integer after the last ':' of a "key : value" preamble line.
int value_after_colon(std::string_view line, int line_no) {
  const auto colon = line.rfind(':');
  auto values = read_ints(line.substr(colon + 1), line_no);
  if (values.empty()) throw ParseError("missing value", line_no);
  return values.front();
}

struct Lines {
  std::vector<std::string> text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  int line_no() const { return static_cast<int>(pos) + 1; }
  std::string_view current() const { return text[pos]; }
};

void expect_column_header(Lines& lines, std::string_view section) {
  if (lines.done() || !starts_with(trim(lines.current()), "jobnr.")) {
    throw ParseError("malformed " + std::string(section) + " section header",
                     lines.done() ? static_cast<int>(lines.text.size()) : lines.line_no());
  }
  ++lines.pos;
}

bool has_cycle(const std::vector<std::vector<int>>& successors) {
  return !topological_order(successors).has_value();
}

}  // namespace

std::optional<std::vector<int>> topological_order(const std::vector<std::vector<int>>& successors) {
  const int n = static_cast<int>(successors.size());
  std::vector<int> indegree(n, 0);
  for (const auto& succ : successors)
    for (int j : succ) {
      if (j < 0 || j >= n) return std::nullopt;
      ++indegree[j];
    }
  // Lowest ready index first keeps the order reproducible.
  std::vector<int> ready;
  for (int i = n - 1; i >= 0; --i)
    if (indegree[i] == 0) ready.push_back(i);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    const int i = *it;
    ready.erase(it);
    order.push_back(i);
    for (int j : successors[i])
      if (--indegree[j] == 0) ready.push_back(j);
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

PsplibProject parse_psplib(std::istream& in) {
  Lines lines;
  for (std::string line; std::getline(in, line);) lines.text.push_back(line);

  PsplibProject project;
  int declared_jobs = -1;
  int renewable = -1;
  bool saw_precedence = false;
  bool saw_requests = false;
  std::vector<std::vector<int>> successors_by_id;
  std::vector<int> precedence_ids;

  while (!lines.done()) {
    const std::string_view line = trim(lines.current());
    const int line_no = lines.line_no();
    if (starts_with(line, "file with basedata")) {
      auto name = std::string(trim(line.substr(line.find(':') + 1)));
      if (auto dot = name.rfind('.'); dot != std::string::npos) name.resize(dot);
      project.name = name;
      ++lines.pos;
    } else if (starts_with(line, "jobs (incl. supersource/sink")) {
      declared_jobs = value_after_colon(line, line_no);
      ++lines.pos;
    } else if (starts_with(line, "horizon")) {
      project.horizon = value_after_colon(line, line_no);
      ++lines.pos;
    } else if (starts_with(line, "- renewable")) {
      renewable = value_after_colon(line.substr(0, line.find_last_of("0123456789") + 1), line_no);
      ++lines.pos;
    } else if (starts_with(line, "PRECEDENCE RELATIONS")) {
      if (line != "PRECEDENCE RELATIONS:") throw ParseError("malformed section header", line_no);
      saw_precedence = true;
      ++lines.pos;
      expect_column_header(lines, "PRECEDENCE RELATIONS");
      for (; !lines.done() && !is_rule(lines.current()); ++lines.pos) {
        if (trim(lines.current()).empty()) continue;
        const auto row = read_ints(lines.current(), lines.line_no());
        if (row.size() < 3) throw ParseError("precedence row needs jobnr, #modes, #successors", lines.line_no());
        if (row[1] != 1) throw ParseError("multi-mode jobs are not supported", lines.line_no());
        if (static_cast<int>(row.size()) - 3 != row[2])
          throw ParseError("successor count does not match listed successors", lines.line_no());
        precedence_ids.push_back(row[0]);
        successors_by_id.emplace_back(row.begin() + 3, row.end());
      }
    } else if (starts_with(line, "REQUESTS/DURATIONS")) {
      if (line != "REQUESTS/DURATIONS:") throw ParseError("malformed section header", line_no);
      saw_requests = true;
      ++lines.pos;
      expect_column_header(lines, "REQUESTS/DURATIONS");
      if (!lines.done() && is_rule(lines.current())) ++lines.pos;
      for (; !lines.done() && !is_rule(lines.current()); ++lines.pos) {
        if (trim(lines.current()).empty()) continue;
        const auto row = read_ints(lines.current(), lines.line_no());
        if (row.size() < 3) throw ParseError("request row needs jobnr, mode, duration", lines.line_no());
        if (row[0] != project.job_count() + 1)
          throw ParseError("jobs must be listed in order", lines.line_no());
        if (row[1] != 1) throw ParseError("multi-mode jobs are not supported", lines.line_no());
        if (row[2] < 0) throw ParseError("negative duration", lines.line_no());
        project.durations.push_back(row[2]);
        std::vector<int> request(row.begin() + 3, row.end());
        if (renewable >= 0) {
          if (static_cast<int>(request.size()) < renewable)
            throw ParseError("fewer request columns than renewable resources", lines.line_no());
          request.resize(renewable);
        }
        project.requests.push_back(std::move(request));
      }
    } else if (starts_with(line, "RESOURCEAVAILABILITIES")) {
      ++lines.pos;
      // Column labels ("R 1  R 2 ...") then one row of capacities.
      if (!lines.done()) ++lines.pos;
      if (!lines.done() && !is_rule(lines.current())) {
        project.capacities = read_ints(lines.current(), lines.line_no());
        if (renewable >= 0 && static_cast<int>(project.capacities.size()) > renewable)
          project.capacities.resize(renewable);
        ++lines.pos;
      }
    } else {
      ++lines.pos;
    }
  }

  if (!saw_precedence) throw ParseError("missing PRECEDENCE RELATIONS: section", 0);
  if (!saw_requests) throw ParseError("missing REQUESTS/DURATIONS: section", 0);
  const int n = project.job_count();
  if (declared_jobs >= 0 && declared_jobs != n)
    throw ParseError("declared " + std::to_string(declared_jobs) + " jobs but found " + std::to_string(n), 0);
  if (static_cast<int>(precedence_ids.size()) != n)
    throw ParseError("precedence rows do not match request rows", 0);

  project.successors.assign(n, {});
  for (std::size_t row = 0; row < precedence_ids.size(); ++row) {
    const int id = precedence_ids[row];
    if (id < 1 || id > n) throw ParseError("job id " + std::to_string(id) + " out of range", 0);
    for (int succ : successors_by_id[row]) {
      if (succ < 1 || succ > n) throw ParseError("successor " + std::to_string(succ) + " out of range", 0);
      project.successors[id - 1].push_back(succ - 1);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j : project.successors[i])
      if (j == i) throw ValidationError("precedence not a DAG: job " + std::to_string(i + 1) + " lists itself as successor");
  if (has_cycle(project.successors)) throw ValidationError("precedence not a DAG");
  return project;
}

PsplibProject parse_psplib_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_psplib(in);
}

PsplibProject parse_psplib_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto project = parse_psplib(in);
  if (project.name.empty()) {
    auto stem = path.substr(path.find_last_of("/\\") + 1);
    if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
    project.name = stem;
  }
  return project;
}

std::string write_psplib(const PsplibProject& project) {
  const std::string rule(72, '*');
  const int n = project.job_count();
  const int types = project.requests.empty() ? static_cast<int>(project.capacities.size())
                                             : static_cast<int>(project.requests.front().size());
  std::ostringstream out;
  out << rule << '\n'
      << "file with basedata            : " << project.name << ".bas\n"
      << "initial value random generator: 0\n"
      << rule << '\n'
      << "projects                      :  1\n"
      << "jobs (incl. supersource/sink ):  " << n << '\n'
      << "horizon                       :  " << project.horizon << '\n'
      << "RESOURCES\n"
      << "  - renewable                 :  " << types << "   R\n"
      << "  - nonrenewable              :  0   N\n"
      << "  - doubly constrained        :  0   D\n"
      << rule << '\n'
      << "PRECEDENCE RELATIONS:\n"
      << "jobnr.    #modes  #successors   successors\n";
  for (int i = 0; i < n; ++i) {
    out << std::setw(4) << i + 1 << "        1" << std::setw(11) << project.successors[i].size() << "      ";
    for (int j : project.successors[i]) out << std::setw(4) << j + 1;
    out << '\n';
  }
  out << rule << '\n' << "REQUESTS/DURATIONS:\n" << "jobnr. mode duration";
  for (int t = 0; t < types; ++t) out << "  R " << t + 1;
  out << '\n' << std::string(72, '-') << '\n';
  for (int i = 0; i < n; ++i) {
    out << std::setw(3) << i + 1 << "      1" << std::setw(6) << project.durations[i] << "  ";
    for (int value : project.requests[i]) out << std::setw(5) << value;
    out << '\n';
  }
  out << rule << '\n' << "RESOURCEAVAILABILITIES:\n";
  for (int t = 0; t < types; ++t) out << "  R " << t + 1;
  out << '\n';
  for (int value : project.capacities) out << std::setw(5) << value;
  out << '\n' << rule << '\n';
  return out.str();
}

}  // namespace msrcpspr
