#include "catg/genfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "catg/errors.hpp"

namespace catg {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('#');
  if (pos != std::string_view::npos) line = line.substr(0, pos);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' ||
                           line.back() == '\r'))
    line.remove_suffix(1);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
    line.remove_prefix(1);
  return line;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

bool GeneratorFile::has(std::string_view name) const {
  for (const auto& [n, p] : entries)
    if (n == name) return true;
  return false;
}

const Perm& GeneratorFile::get(std::string_view name) const {
  for (const auto& [n, p] : entries)
    if (n == name) return p;
  throw Error("no generator named '" + std::string(name) + "'");
}

std::vector<Perm> GeneratorFile::all_perms() const {
  std::vector<Perm> out;
  out.reserve(entries.size());
  for (const auto& [n, p] : entries) out.push_back(p);
  return out;
}

GeneratorFile parse_generator_file(std::string_view text) {
  GeneratorFile file;
  std::unordered_set<std::string> names;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_degree = false;

  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw_line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    std::size_t line_offset = pos;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string_view line = strip_comment(raw_line);
    if (line.empty()) continue;

    if (!have_degree) {
      if (line.substr(0, 7) != "degree " && line != "degree")
        throw ParseError("first non-comment line must be 'degree <n>'",
                         line_offset, line_no);
      std::istringstream in{std::string(line.substr(6))};
      int n = 0;
      if (!(in >> n) || n < 1)
        throw ParseError("bad degree", line_offset, line_no);
      file.degree = n;
      have_degree = true;
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected '<name> = <cycles>'", line_offset, line_no);
    std::string_view name = strip_comment(line.substr(0, eq));
    std::string_view cycles = line.substr(eq + 1);
    if (!valid_name(name))
      throw ParseError("bad generator name '" + std::string(name) + "'",
                       line_offset, line_no);
    if (!names.insert(std::string(name)).second)
      throw ParseError("duplicate generator name '" + std::string(name) + "'",
                       line_offset, line_no);
    try {
      file.entries.emplace_back(std::string(name),
                                parse_cycles(cycles, file.degree));
    } catch (const ParseError& e) {
      throw ParseError("in generator '" + std::string(name) +
                           "': " + e.what(),
                       line_offset + eq + 1 + e.offset, line_no);
    }
  }
  if (!have_degree) throw ParseError("missing 'degree <n>' line", 0, 1);
  return file;
}

GeneratorFile load_generator_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open generator file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generator_file(buf.str());
}

std::string write_generator_file(const GeneratorFile& file) {
  std::string out = "degree " + std::to_string(file.degree) + "\n";
  for (const auto& [name, perm] : file.entries)
    out += name + " = " + to_cycle_string(perm) + "\n";
  return out;
}

}  // namespace catg
