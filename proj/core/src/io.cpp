#include "splineframes/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "splineframes/errors.hpp"

namespace splineframes {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

double parse_plain(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("malformed number '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    out.emplace_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_real(std::string_view text) {
  double v = 0.0;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_plain(text.substr(0, slash), text);
    const double den = parse_plain(text.substr(slash + 1), text);
    if (den == 0.0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    v = num / den;
  } else {
    v = parse_plain(text, text);
  }
  if (!std::isfinite(v)) throw DomainError("non-finite number '" + std::string(text) + "'");
  return v;
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      table.comments.emplace_back(trim(view.substr(1)));
      continue;
    }
    if (!have_header) {
      table.header = split(view);
      have_header = true;
    } else {
      table.rows.push_back(split(view));
    }
  }
  if (!have_header) throw DomainError("csv: missing header line");
  return table;
}

Window load_tabulated_window(const std::filesystem::path& path,
                             double support_length) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open window file " + path.string());
  const CsvTable table = read_csv(in);
  if (table.header.size() != 2)
    throw DomainError("window file must have exactly two columns");
  std::vector<double> xs, vs;
  for (const auto& row : table.rows) {
    if (row.size() != 2) throw DomainError("window file: row with wrong column count");
    xs.push_back(parse_real(row[0]));
    vs.push_back(parse_real(row[1]));
  }
  return Window::tabulated(std::move(xs), std::move(vs), support_length);
}

}  // namespace splineframes
