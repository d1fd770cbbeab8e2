// Copyright 2026 The Taxlog Authors
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

// Statute source files: parsing the subdivision tree out of the marker
// lines, plus the corpus text statistics.
//
// File format (data/statutes/source/sectionN.txt):
//   line 1: "Section N. Title."
//   every other line is either "(marker) text" (one physical line per
//   subdivision) or marker-less section-level prose.
//
// Subdivision markers nest in the fixed statutory order
//   (a) -> (1) -> (A) -> (i) -> (I)
// i.e. letter, number, capital, roman, capital roman by nesting level.
// A marker line either continues one of the currently open levels or
// opens the next deeper level (as that level's start marker).  Matching
// precedence: immediate successor of an open level (deepest first), then
// child start, then a forward jump within an open level (real sections
// omit subdivisions — section 68 runs (d) then (f)).  Successor-before-
// child-start resolves the classic "(i)" ambiguity — after "(h)" it
// reads as the letter i, elsewhere as roman — and jump-last keeps "(i)"
// after "(c)" roman rather than a letter jump.
//
// Text statistics (frozen rules, kept identical to the corpus
// calibrator):
//   - markers are structural labels: "(x) " is stripped before counting
//   - tokens: lowercased, split on whitespace, punctuation retained
//   - sentence boundary: [.?!] followed by space, tab, newline, end of
//     text, or a double quote -- except between two digits.  A line
//     without a terminator continues the sentence (em-dash chains span
//     subdivision lines).
//   - the "Section N. Title." header contributes two sentence units

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace taxlog {

class StatuteError : public std::runtime_error {
public:
  explicit StatuteError(const std::string& what) : std::runtime_error(what) {}
};

namespace statutes {

// ---------------------------------------------------------------------------
// Markers.

enum class MarkerKind { Letter, Number, Capital, Roman, CapitalRoman };

// Nesting order: level 1 = Letter, ..., level 5 = CapitalRoman.
inline MarkerKind kind_at_level(int level) {
  switch (level) {
    case 1: return MarkerKind::Letter;
    case 2: return MarkerKind::Number;
    case 3: return MarkerKind::Capital;
    case 4: return MarkerKind::Roman;
    case 5: return MarkerKind::CapitalRoman;
  }
  throw StatuteError("no marker kind at level " + std::to_string(level));
}

inline std::string roman_lower(int n) {
  static const char* ones[] = {"",  "i",  "ii",  "iii",  "iv",
                               "v", "vi", "vii", "viii", "ix"};
  static const char* tens[] = {"", "x", "xx", "xxx", "xl", "l"};
  if (n < 1 || n > 59) throw StatuteError("roman numeral out of range");
  return std::string(tens[n / 10]) + ones[n % 10];
}

// The n-th marker (1-based) of a kind: a/b/c..., 1/2/3..., A/B/C...,
// i/ii/iii..., I/II/III...
inline std::string marker_for(MarkerKind kind, int n) {
  switch (kind) {
    case MarkerKind::Letter:
      if (n < 1 || n > 26) throw StatuteError("letter marker out of range");
      return std::string(1, static_cast<char>('a' + n - 1));
    case MarkerKind::Number:
      return std::to_string(n);
    case MarkerKind::Capital:
      if (n < 1 || n > 26) throw StatuteError("capital marker out of range");
      return std::string(1, static_cast<char>('A' + n - 1));
    case MarkerKind::Roman:
      return roman_lower(n);
    case MarkerKind::CapitalRoman: {
      std::string s = roman_lower(n);
      for (char& c : s) c = static_cast<char>(std::toupper(c));
      return s;
    }
  }
  throw StatuteError("bad marker kind");
}

// The ordinal a marker body denotes under a given kind, or 0 when the
// body is not of that kind ("i" is 9 as a letter and 1 as a roman).
inline int marker_value(MarkerKind kind, const std::string& m) {
  if (m.empty()) return 0;
  switch (kind) {
    case MarkerKind::Letter:
      if (m.size() == 1 && m[0] >= 'a' && m[0] <= 'z') return m[0] - 'a' + 1;
      return 0;
    case MarkerKind::Number: {
      for (char c : m)
        if (!std::isdigit(static_cast<unsigned char>(c))) return 0;
      return std::stoi(m);
    }
    case MarkerKind::Capital:
      if (m.size() == 1 && m[0] >= 'A' && m[0] <= 'Z') return m[0] - 'A' + 1;
      return 0;
    case MarkerKind::Roman:
    case MarkerKind::CapitalRoman:
      for (int n = 1; n <= 59; ++n)
        if (marker_for(kind, n) == m) return n;
      return 0;
  }
  return 0;
}

// Extracts a leading "(marker) " from a line; returns the marker body or
// an empty string if the line is marker-less prose.  The marker class
// must be homogeneous (all digits, all lowercase, or all uppercase).
inline std::string leading_marker(const std::string& line) {
  if (line.empty() || line[0] != '(') return "";
  auto close = line.find(')');
  if (close == std::string::npos || close < 2) return "";
  if (close + 1 >= line.size() || line[close + 1] != ' ') return "";
  std::string body = line.substr(1, close - 1);
  auto all = [&](int (*pred)(int)) {
    return std::all_of(body.begin(), body.end(),
                       [&](unsigned char c) { return pred(c); });
  };
  if (all(std::isdigit) || all(std::islower) || all(std::isupper)) return body;
  return "";
}

// ---------------------------------------------------------------------------
// Section tree.

struct StatuteNode {
  std::string path;    // "a/1/B"; empty for the section root
  std::string text;    // line text with the marker stripped
  int parent = -1;     // index into Section::nodes; -1 for the root
  std::vector<int> children;
};

struct Section {
  std::string number;              // "63"
  std::string title;               // "Itemized deductions"
  std::vector<std::string> lines;  // all physical lines, in file order
  std::vector<StatuteNode> nodes;  // nodes[0] is the section root

  const StatuteNode* find(const std::string& path) const {
    for (const auto& n : nodes)
      if (n.path == path) return &n;
    return nullptr;
  }
};

inline Section parse_section(const std::string& contents,
                             const std::string& name = "<statute>") {
  Section sec;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char c : contents) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw StatuteError(name + ": empty statute file");

  // Header: "Section N. Title."
  const std::string& head = lines[0];
  if (head.rfind("Section ", 0) != 0)
    throw StatuteError(name + ": missing 'Section N. Title.' header");
  auto dot = head.find(". ");
  if (dot == std::string::npos || head.back() != '.')
    throw StatuteError(name + ": malformed header: " + head);
  sec.number = head.substr(8, dot - 8);
  sec.title = head.substr(dot + 2, head.size() - dot - 3);
  sec.lines = lines;

  sec.nodes.push_back(StatuteNode{});  // section root

  // Open levels: indices into sec.nodes of the rightmost node at each
  // depth (stack[0] is the root).
  std::vector<int> stack = {0};
  // Ordinal of the last marker seen at each open level (1-based).
  std::vector<int> ordinals = {0};

  for (size_t li = 1; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.empty()) continue;
    std::string m = leading_marker(line);
    if (m.empty()) {
      // Section-level prose attaches to the root.
      if (stack.size() != 1)
        throw StatuteError(name + ": marker-less line after subdivisions: " +
                           line);
      StatuteNode& root = sec.nodes[0];
      if (!root.text.empty()) root.text += "\n";
      root.text += line;
      continue;
    }
    std::string text = line.substr(m.size() + 3);

    // 1. Immediate successor of an open level, deepest first.
    int attach_level = -1, value = 0;
    for (int lvl = static_cast<int>(stack.size()) - 1; lvl >= 1; --lvl) {
      int v = marker_value(kind_at_level(lvl), m);
      if (v != 0 && v == ordinals[lvl] + 1) {
        attach_level = lvl;
        value = v;
        break;
      }
    }
    // 2. Otherwise: the start marker of the next deeper level.
    if (attach_level == -1) {
      int lvl = static_cast<int>(stack.size());
      if (lvl <= 5 && marker_value(kind_at_level(lvl), m) == 1) {
        attach_level = lvl;
        value = 1;
      }
    }
    // 3. Otherwise: a forward jump within an open level (omitted
    // subdivisions keep their gaps in real sections), deepest first.
    if (attach_level == -1) {
      for (int lvl = static_cast<int>(stack.size()) - 1; lvl >= 1; --lvl) {
        int v = marker_value(kind_at_level(lvl), m);
        if (v > ordinals[lvl] + 1) {
          attach_level = lvl;
          value = v;
          break;
        }
      }
    }
    if (attach_level == -1)
      throw StatuteError(name + ": marker (" + m +
                         ") fits no open level and starts no child level");

    stack.resize(attach_level);
    ordinals.resize(attach_level);
    int parent = stack.back();

    StatuteNode node;
    node.parent = parent;
    node.text = text;
    node.path = sec.nodes[parent].path.empty()
                    ? m
                    : sec.nodes[parent].path + "/" + m;
    int idx = static_cast<int>(sec.nodes.size());
    sec.nodes.push_back(node);
    sec.nodes[parent].children.push_back(idx);
    stack.push_back(idx);
    ordinals.push_back(value);
  }
  return sec;
}

inline Section load_section_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StatuteError("cannot open statute file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_section(ss.str(), path);
}

// The nine SARA sections, in ascending numeric order.
inline const std::vector<std::string>& section_numbers() {
  static const std::vector<std::string> nums = {
      "1", "2", "63", "68", "151", "152", "3301", "3306", "7703"};
  return nums;
}

inline std::vector<Section> load_statutes(const std::string& dir) {
  std::vector<Section> out;
  for (const auto& n : section_numbers()) {
    Section s = load_section_file(dir + "/section" + n + ".txt");
    if (s.number != n)
      throw StatuteError("file section" + n + ".txt declares Section " +
                         s.number);
    out.push_back(std::move(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tree statistics (the statute-tree table).
//
// Depth counts a single virtual corpus root at depth 0; each section is a
// node at depth 1 and subdivisions extend below it.

struct TreeStats {
  int nodes = 0;
  int leaves = 0;
  std::map<int, int> node_depths;   // depth -> count (includes the root)
  std::map<int, int> leaf_depths;   // depth -> count
  double median_node_depth = 0.0;
  std::map<std::string, int> nodes_per_section;  // section node + subdivisions
};

inline TreeStats tree_stats(const std::vector<Section>& sections) {
  TreeStats ts;
  std::vector<int> depths;
  depths.push_back(0);  // virtual corpus root
  ts.nodes = 1;
  for (const auto& sec : sections) {
    int count_here = 0;
    for (const auto& n : sec.nodes) {
      int depth = 1;  // the section node itself
      if (!n.path.empty())
        depth += 1 + static_cast<int>(
                         std::count(n.path.begin(), n.path.end(), '/'));
      depths.push_back(depth);
      ++ts.nodes;
      ++count_here;
      if (n.children.empty()) {
        ++ts.leaves;
        ++ts.leaf_depths[depth];
      }
    }
    ts.nodes_per_section[sec.number] = count_here;
  }
  for (int d : depths) ++ts.node_depths[d];
  std::sort(depths.begin(), depths.end());
  size_t n = depths.size();
  ts.median_node_depth =
      n % 2 ? depths[n / 2] : (depths[n / 2 - 1] + depths[n / 2]) / 2.0;
  return ts;
}

// ---------------------------------------------------------------------------
// Text statistics (frozen tokenizer + sentence rules).

// Strips a structural marker from the front of a line, if present.
inline std::string strip_marker(const std::string& line) {
  std::string m = leading_marker(line);
  if (m.empty()) return line;
  return line.substr(m.size() + 3);
}

// Lowercased whitespace tokens, punctuation retained.
inline std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      cur += static_cast<char>(std::tolower(c));
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Splits text into sentence units under the frozen boundary rule.
inline std::vector<std::string> sentence_units(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&]() {
    // Trim surrounding whitespace; keep only units that carry a token.
    size_t b = cur.find_first_not_of(" \t\n");
    size_t e = cur.find_last_not_of(" \t\n");
    if (b != std::string::npos) {
      std::string s = cur.substr(b, e - b + 1);
      if (!tokens(s).empty()) out.push_back(s);
    }
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    cur += ch;
    if (ch == '.' || ch == '?' || ch == '!') {
      bool prev_digit = i > 0 && std::isdigit(static_cast<unsigned char>(
                                     text[i - 1]));
      bool next_digit = i + 1 < text.size() &&
                        std::isdigit(static_cast<unsigned char>(text[i + 1]));
      if (prev_digit && next_digit) continue;  // decimal / enumeration dot
      char nxt = i + 1 < text.size() ? text[i + 1] : '\n';
      if (nxt == ' ' || nxt == '\n' || nxt == '\t' || nxt == '"') flush();
    }
  }
  flush();
  return out;
}

struct LangStats {
  std::map<std::string, int> words_per_section;
  std::vector<int> sentence_lengths;  // in file order
  std::set<std::string> vocabulary;

  int total_words() const {
    int s = 0;
    for (const auto& [k, v] : words_per_section) s += v;
    return s;
  }
  int total_sentences() const {
    return static_cast<int>(sentence_lengths.size());
  }
};

inline double mean_of(const std::vector<int>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0;
  for (int x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double pstdev_of(const std::vector<int>& xs) {
  if (xs.empty()) return 0.0;
  double m = mean_of(xs), acc = 0;
  for (int x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(xs.size()));
}

inline double median_of(std::vector<int> xs) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  size_t n = xs.size();
  return n % 2 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

inline LangStats lang_stats(const std::vector<Section>& sections) {
  LangStats ls;
  for (const auto& sec : sections) {
    std::string stat_text;
    for (const auto& line : sec.lines) {
      if (!stat_text.empty()) stat_text += "\n";
      stat_text += strip_marker(line);
    }
    auto toks = tokens(stat_text);
    ls.words_per_section[sec.number] = static_cast<int>(toks.size());
    for (const auto& t : toks) ls.vocabulary.insert(t);
    for (const auto& unit : sentence_units(stat_text))
      ls.sentence_lengths.push_back(static_cast<int>(tokens(unit).size()));
  }
  return ls;
}

// ---------------------------------------------------------------------------
// Cross-reference metadata (cross_references.tsv).

struct CrossRef {
  std::string section;     // "63"
  std::string subsection;  // "c/2/A"; empty = section level
  std::string kind;        // ew | iw | ec | ic
  std::string target;      // "7703", "2(a)", ...
};

inline std::vector<CrossRef> load_cross_references(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StatuteError("cannot open " + path);
  std::vector<CrossRef> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::string cur;
    for (char c : line) {
      if (c == '\t') {
        cols.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    cols.push_back(cur);
    if (first) {
      first = false;
      if (cols.size() == 4 && cols[0] == "section") continue;  // header
    }
    if (cols.size() != 4)
      throw StatuteError("malformed cross_references row: " + line);
    out.push_back(CrossRef{cols[0], cols[1], cols[2], cols[3]});
  }
  return out;
}

// Number of distinct subsections containing at least one reference of
// each kind (the cross-reference table's counting convention).
inline std::map<std::string, int> xref_kind_presence(
    const std::vector<CrossRef>& refs) {
  std::map<std::string, std::set<std::pair<std::string, std::string>>> seen;
  for (const auto& r : refs) seen[r.kind].insert({r.section, r.subsection});
  std::map<std::string, int> out;
  for (const auto& [k, s] : seen) out[k] = static_cast<int>(s.size());
  return out;
}

}  // namespace statutes
}  // namespace taxlog
