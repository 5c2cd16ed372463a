#include "coverlab/cli/parse.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace coverlab::cli {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(pos, nl - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    ++number;
    out.push_back({number, line});
    pos = nl + 1;
  }
  return out;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool blank(std::string_view s) {
  for (char c : s)
    if (!is_space(c)) return false;
  return true;
}

std::uint64_t parse_u64(std::string_view s, std::size_t line, std::size_t column, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, column, std::string("expected ") + what + ", got '" + std::string(s) + "'");
  }
  return v;
}

// Whitespace-separated tokens with their 1-based columns.
std::vector<std::pair<std::size_t, std::string_view>> tokens(std::string_view s) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t b = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > b) out.emplace_back(b + 1, s.substr(b, i - b));
  }
  return out;
}

}  // namespace

zcover::ResidueSystem parse_cover_text(std::string_view text) {
  std::vector<zcover::ResidueClass> classes;
  for (const auto& line : split_lines(text)) {
    for (const auto& [col, tok] : tokens(line.text)) {
      auto slash = tok.find('/');
      if (slash == std::string_view::npos) throw ParseError(line.number, col, "expected a/n");
      auto a = parse_u64(tok.substr(0, slash), line.number, col, "a residue");
      auto n = parse_u64(tok.substr(slash + 1), line.number, col + slash + 1, "a modulus");
      if (n == 0) throw ParseError(line.number, col + slash + 1, "modulus must be positive");
      if (a >= n) {
        throw ParseError(line.number, col, "residue out of range: " + std::to_string(a) + " >= " + std::to_string(n));
      }
      classes.push_back({a, n});
    }
  }
  if (classes.empty()) throw ParseError(1, 1, "empty cover file");
  return zcover::ResidueSystem(std::move(classes));
}

std::string serialize_cover(const zcover::ResidueSystem& sys) {
  std::string out;
  for (const auto& c : sys.classes()) out += std::to_string(c.residue) + "/" + std::to_string(c.modulus) + "\n";
  return out;
}

group::FiniteGroup parse_group_text(std::string_view text) {
  auto records = group::parse_group_records(text);
  if (records.size() != 1) {
    throw ParseError(1, 1, "expected exactly one group record, found " + std::to_string(records.size()));
  }
  return group::build_group(records.front());
}

GroupCoverInput parse_group_cover_text(std::string_view text, const group::Catalog& catalog) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && blank(lines[i].text)) ++i;
  };
  skip_blank();
  if (i == lines.size()) throw ParseError(1, 1, "empty cover file");
  auto head = tokens(lines[i].text);
  if (head.size() != 2 || head[0].second != "group") {
    throw ParseError(lines[i].number, 1, "expected 'group NAME'");
  }

  GroupCoverInput input;
  input.group_name = std::string(head[1].second);
  const std::size_t head_index = i++;
  skip_blank();
  bool inline_record = false;
  if (i < lines.size()) {
    auto t = tokens(lines[i].text);
    const auto key = t.front().second;
    inline_record = key == "degree" || key == "expected_order" || key == "generator" || key == "end";
  }

  group::FiniteGroup G;
  if (inline_record) {
    std::size_t end = i;
    while (end < lines.size() && !(tokens(lines[end].text).size() == 1 && tokens(lines[end].text)[0].second == "end"))
      ++end;
    if (end == lines.size()) throw ParseError(lines[head_index].number, 1, "group record not terminated by 'end'");
    std::string record;
    for (std::size_t j = head_index; j <= end; ++j) record += std::string(lines[j].text) + "\n";
    auto records = group::parse_group_records(record, lines[head_index].number);
    G = group::build_group(records.front());
    i = end + 1;
  } else {
    const auto* entry = catalog.find(input.group_name);
    if (!entry) throw ParseError(lines[head_index].number, head[1].first, "unknown catalog group " + input.group_name);
    G = entry->group;
  }
  auto lattice = std::make_shared<group::SubgroupLattice>(std::move(G));
  const auto order = lattice->group().order();

  for (; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (blank(line.text)) continue;
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos) throw ParseError(line.number, 1, "expected 'rep : generators'");
    auto left = tokens(line.text.substr(0, colon));
    if (left.size() != 1) throw ParseError(line.number, 1, "expected one token before ':'");
    std::vector<group::ElementId> gens;
    for (const auto& [col, tok] : tokens(line.text.substr(colon + 1))) {
      auto g = parse_u64(tok, line.number, colon + 1 + col, "an element id");
      if (g >= order) throw ParseError(line.number, colon + 1 + col, "element id out of range");
      gens.push_back(static_cast<group::ElementId>(g));
    }
    auto sub = group::Subgroup::generated_by(lattice->group(), gens);
    if (left[0].second == "H") {
      if (input.h) throw ParseError(line.number, 1, "H given twice");
      input.h = std::move(sub);
      continue;
    }
    auto rep = parse_u64(left[0].second, line.number, left[0].first, "a representative id");
    if (rep >= order) throw ParseError(line.number, left[0].first, "representative out of range");
    input.entries.push_back({static_cast<group::ElementId>(rep), std::move(sub)});
  }
  if (input.entries.empty()) throw ParseError(lines.back().number, 1, "no coset entries");
  input.lattice = std::move(lattice);
  return input;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace coverlab::cli
