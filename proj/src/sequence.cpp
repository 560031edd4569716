#include "forestcolor/sequence.hpp"

#include <charconv>
#include <vector>

namespace forestcolor {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId parse_vertex(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v >= kNoVertex) {
    throw ParseError(line, "bad vertex '" + std::string(tok) + "'");
  }
  return static_cast<VertexId>(v);
}

}  // namespace

UpdateSequence parse_sequence(std::string_view text) {
  UpdateSequence seq;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "+") {
      if (tok.size() != 3 && tok.size() != 4) throw ParseError(line_no, "expected '+ u v [p=x]'");
      Update up = Update::insert(parse_vertex(tok[1], line_no), parse_vertex(tok[2], line_no));
      if (tok.size() == 4) {
        if (tok[3].substr(0, 2) != "p=") throw ParseError(line_no, "expected p=<vertex>");
        VertexId p = parse_vertex(tok[3].substr(2), line_no);
        if (p != up.u && p != up.v) throw ParseError(line_no, "parent is not an endpoint");
        up.parent_hint = p;
      }
      seq.push_back(up);
    } else if (tok[0] == "-") {
      if (tok.size() != 3) throw ParseError(line_no, "expected '- u v'");
      seq.push_back(Update::erase(parse_vertex(tok[1], line_no), parse_vertex(tok[2], line_no)));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  return seq;
}

std::string serialize_sequence(const UpdateSequence& seq) {
  std::string out;
  for (const Update& up : seq) {
    out += up.kind == UpdateKind::Insert ? "+ " : "- ";
    out += std::to_string(up.u);
    out += ' ';
    out += std::to_string(up.v);
    if (up.kind == UpdateKind::Insert && up.parent_hint) out += " p=" + std::to_string(*up.parent_hint);
    out += '\n';
  }
  return out;
}

}  // namespace forestcolor
