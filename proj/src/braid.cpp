#include "platjones/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "platjones/error.hpp"

namespace platjones::braid {

LevelSlice LevelSlice::swapped(std::size_t i) const {
  LevelSlice out = *this;
  std::swap(out.strands.at(i), out.strands.at(i + 1));
  return out;
}

namespace {

// Bottom index of the strand that ends at each top position.
std::vector<int> top_occupants(int strands, const std::vector<int>& word) {
  std::vector<int> at(static_cast<std::size_t>(strands));
  std::iota(at.begin(), at.end(), 0);
  for (int g : word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(g) - 1);
    std::swap(at[i], at[i + 1]);
  }
  return at;
}

std::vector<bool> infer_orientation(int strands, const std::vector<int>& word) {
  const std::vector<int> top = top_occupants(strands, word);
  std::vector<int> top_pos_of(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) top_pos_of[static_cast<std::size_t>(top[static_cast<std::size_t>(p)])] = p;

  std::vector<int> orient(static_cast<std::size_t>(strands), 0);  // 0 unset, +1 up, -1 down
  for (int start = 0; start < strands; ++start) {
    int cur = start;
    while (orient[static_cast<std::size_t>(cur)] == 0) {
      orient[static_cast<std::size_t>(cur)] = 1;
      const int partner_top = top_pos_of[static_cast<std::size_t>(cur)] ^ 1;
      const int down = top[static_cast<std::size_t>(partner_top)];
      orient[static_cast<std::size_t>(down)] = -1;
      cur = down ^ 1;
    }
  }
  std::vector<bool> up(static_cast<std::size_t>(strands));
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = orient[i] > 0;
  return up;
}

}  // namespace

ColoredBraidWord make_braid(int strands, const std::vector<int>& colors_twice,
                            const std::vector<int>& word, const std::optional<std::string>& orient) {
  if (strands < 2 || strands % 2 != 0) {
    throw Error(ErrorCode::Syntax, "strands must be an even integer >= 2, got " + std::to_string(strands));
  }
  if (colors_twice.size() != static_cast<std::size_t>(strands)) {
    throw Error(ErrorCode::Syntax, "expected " + std::to_string(strands) + " colors, got " +
                                       std::to_string(colors_twice.size()));
  }
  for (int c : colors_twice) {
    if (c < 0) throw Error(ErrorCode::Syntax, "negative color");
  }
  for (int g : word) {
    if (g == 0 || std::abs(g) > strands - 1) {
      throw Error(ErrorCode::Index, "generator " + std::to_string(g) + " outside 1.." +
                                        std::to_string(strands - 1));
    }
  }
  ColoredBraidWord b;
  b.strands = strands;
  b.word = word;
  std::vector<bool> up;
  if (orient) {
    if (orient->size() != static_cast<std::size_t>(strands)) {
      throw Error(ErrorCode::Syntax, "orient must have one u/d per strand");
    }
    for (char ch : *orient) {
      if (ch != 'u' && ch != 'd') throw Error(ErrorCode::Syntax, std::string("bad orientation '") + ch + "'");
      up.push_back(ch == 'u');
    }
  } else {
    up = infer_orientation(strands, word);
  }
  for (int i = 0; i < strands; ++i) {
    b.bottom.strands.push_back({Spin{colors_twice[static_cast<std::size_t>(i)]}, up[static_cast<std::size_t>(i)]});
  }
  check_plat(b);
  return b;
}

namespace {

struct Token {
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({std::string(text.substr(start, i - start)), start});
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

int parse_color(std::string_view s, std::size_t offset) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    auto v = to_int(s);
    if (!v || *v < 0) throw Error(ErrorCode::Syntax, "bad color '" + std::string(s) + "'", offset);
    return 2 * *v;
  }
  auto num = to_int(s.substr(0, slash));
  if (s.substr(slash + 1) != "2" || !num || *num < 0 || *num % 2 == 0) {
    throw Error(ErrorCode::Syntax, "bad color '" + std::string(s) + "' (expected n or odd/2)", offset);
  }
  return *num;
}

ColoredBraidWord parse_json_form(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Syntax, std::string("invalid JSON: ") + e.what(), e.byte);
  }
  try {
    std::optional<std::string> orient;
    if (j.contains("orient") && !j.at("orient").is_null()) orient = j.at("orient").get<std::string>();
    std::vector<int> word;
    if (j.contains("word")) word = j.at("word").get<std::vector<int>>();
    return make_braid(j.at("strands").get<int>(), j.at("colors_twice").get<std::vector<int>>(), word, orient);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Syntax, std::string("malformed braid JSON: ") + e.what());
  }
}

}  // namespace

ColoredBraidWord parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_form(text);

  struct Field {
    std::vector<Token> pieces;
    std::size_t key_offset = 0;
    bool seen = false;
  };
  Field strands, colors, word, orient;
  Field* current = nullptr;
  for (const Token& tok : tokenize(text)) {
    const auto eq = tok.text.find('=');
    if (eq == std::string::npos) {
      if (current == nullptr) throw Error(ErrorCode::Syntax, "expected key=value, got '" + tok.text + "'", tok.offset);
      current->pieces.push_back(tok);
      continue;
    }
    const std::string key = tok.text.substr(0, eq);
    if (key == "strands") current = &strands;
    else if (key == "colors") current = &colors;
    else if (key == "word") current = &word;
    else if (key == "orient") current = &orient;
    else throw Error(ErrorCode::Syntax, "unknown key '" + key + "'", tok.offset);
    if (current->seen) throw Error(ErrorCode::Syntax, "duplicate key '" + key + "'", tok.offset);
    current->seen = true;
    current->key_offset = tok.offset;
    if (eq + 1 < tok.text.size()) current->pieces.push_back({tok.text.substr(eq + 1), tok.offset + eq + 1});
  }
  if (!strands.seen) throw Error(ErrorCode::Syntax, "missing strands=", 0);
  if (!colors.seen) throw Error(ErrorCode::Syntax, "missing colors=", 0);

  if (strands.pieces.size() != 1) throw Error(ErrorCode::Syntax, "strands= takes one integer", strands.key_offset);
  const auto n = to_int(strands.pieces[0].text);
  if (!n || *n < 2 || *n % 2 != 0) {
    throw Error(ErrorCode::Syntax, "strands must be an even integer >= 2", strands.pieces[0].offset);
  }

  std::vector<int> colors_twice;
  for (const Token& piece : colors.pieces) {
    std::size_t pos = 0;
    while (pos <= piece.text.size()) {
      const auto comma = piece.text.find(',', pos);
      const std::size_t end = comma == std::string::npos ? piece.text.size() : comma;
      if (end > pos) colors_twice.push_back(parse_color(std::string_view(piece.text).substr(pos, end - pos), piece.offset + pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (colors_twice.size() != static_cast<std::size_t>(*n)) {
    throw Error(ErrorCode::Syntax, "expected " + std::to_string(*n) + " colors, got " + std::to_string(colors_twice.size()),
                colors.key_offset);
  }

  std::vector<int> letters;
  for (const Token& piece : word.pieces) {
    const auto g = to_int(piece.text);
    if (!g || *g == 0) throw Error(ErrorCode::Syntax, "bad generator '" + piece.text + "'", piece.offset);
    if (std::abs(*g) > *n - 1) {
      throw Error(ErrorCode::Index, "generator " + piece.text + " exceeds " + std::to_string(*n - 1), piece.offset);
    }
    letters.push_back(*g);
  }

  std::optional<std::string> orient_text;
  if (orient.seen) {
    if (orient.pieces.size() != 1) throw Error(ErrorCode::Syntax, "orient= takes one u/d string", orient.key_offset);
    orient_text = orient.pieces[0].text;
    for (std::size_t i = 0; i < orient_text->size(); ++i) {
      const char ch = (*orient_text)[i];
      if (ch != 'u' && ch != 'd') {
        throw Error(ErrorCode::Syntax, std::string("bad orientation '") + ch + "'", orient.pieces[0].offset + i);
      }
    }
  }
  return make_braid(*n, colors_twice, letters, orient_text);
}

std::string format_spin(Spin s) {
  if (s.twice % 2 == 0) return std::to_string(s.twice / 2);
  return std::to_string(s.twice) + "/2";
}

std::string render(const ColoredBraidWord& b) {
  std::ostringstream os;
  os << "strands=" << b.strands << " colors=";
  for (std::size_t i = 0; i < b.bottom.size(); ++i) os << (i ? "," : "") << format_spin(b.bottom[i].color);
  os << " word=";
  for (std::size_t i = 0; i < b.word.size(); ++i) os << (i ? " " : "") << b.word[i];
  os << " orient=";
  for (const auto& s : b.bottom.strands) os << (s.up ? 'u' : 'd');
  return os.str();
}

std::string render_json(const ColoredBraidWord& b) {
  nlohmann::json j;
  j["strands"] = b.strands;
  std::vector<int> colors;
  std::string orient;
  for (const auto& s : b.bottom.strands) {
    colors.push_back(s.color.twice);
    orient.push_back(s.up ? 'u' : 'd');
  }
  j["colors_twice"] = colors;
  j["word"] = b.word;
  j["orient"] = orient;
  return j.dump();
}

LevelSlice slice_at(const ColoredBraidWord& b, std::size_t position) {
  if (position > b.word.size()) {
    throw Error(ErrorCode::OutOfRange, "slice position " + std::to_string(position) + " beyond word length " +
                                           std::to_string(b.word.size()));
  }
  LevelSlice s = b.bottom;
  for (std::size_t i = 0; i < position; ++i) {
    const std::size_t p = static_cast<std::size_t>(std::abs(b.word[i]) - 1);
    std::swap(s.strands[p], s.strands[p + 1]);
  }
  return s;
}

ColoredBraidWord mirror(const ColoredBraidWord& b) {
  ColoredBraidWord out;
  out.strands = b.strands;
  out.bottom = slice_at(b, b.word.size());
  for (auto& s : out.bottom.strands) s.up = !s.up;
  out.word.assign(b.word.rbegin(), b.word.rend());
  for (int& g : out.word) g = -g;
  return out;
}

namespace {

void check_caps(const LevelSlice& s, const char* where) {
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    if (s[i].color != s[i + 1].color || s[i].up == s[i + 1].up) {
      throw Error(ErrorCode::Plat, std::string(where) + " cap on strands " + std::to_string(i + 1) + "," +
                                       std::to_string(i + 2) +
                                       " needs equal colors and opposite orientations");
    }
  }
}

}  // namespace

void check_plat(const ColoredBraidWord& b) {
  if (b.bottom.size() != static_cast<std::size_t>(b.strands)) {
    throw Error(ErrorCode::Plat, "bottom slice has wrong strand count");
  }
  check_caps(b.bottom, "bottom");
  check_caps(slice_at(b, b.word.size()), "top");
}

void check_level(const ColoredBraidWord& b, const Level& level) {
  for (std::size_t i = 0; i < b.bottom.size(); ++i) {
    if (b.bottom[i].color.twice > level.k()) {
      throw Error(ErrorCode::Truncation, "color " + format_spin(b.bottom[i].color) + " on strand " +
                                             std::to_string(i + 1) + " exceeds k/2 = " +
                                             std::to_string(level.k()) + "/2");
    }
  }
}

int component_count(const ColoredBraidWord& b) {
  const std::vector<int> top = top_occupants(b.strands, b.word);
  std::vector<int> top_pos_of(static_cast<std::size_t>(b.strands));
  for (int p = 0; p < b.strands; ++p) top_pos_of[static_cast<std::size_t>(top[static_cast<std::size_t>(p)])] = p;
  std::vector<bool> seen(static_cast<std::size_t>(b.strands), false);
  int count = 0;
  for (int start = 0; start < b.strands; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    int cur = start;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      const int down = top[static_cast<std::size_t>(top_pos_of[static_cast<std::size_t>(cur)] ^ 1)];
      seen[static_cast<std::size_t>(down)] = true;
      cur = down ^ 1;
    }
  }
  return count;
}

ColoredBraidWord insert_cancelling_pair(const ColoredBraidWord& b, std::size_t at, int g) {
  if (g == 0 || std::abs(g) > b.strands - 1) throw Error(ErrorCode::Index, "generator out of range");
  if (at > b.word.size()) throw Error(ErrorCode::OutOfRange, "insertion point beyond word");
  ColoredBraidWord out = b;
  out.word.insert(out.word.begin() + static_cast<std::ptrdiff_t>(at), {g, -g});
  return out;
}

}  // namespace platjones::braid
