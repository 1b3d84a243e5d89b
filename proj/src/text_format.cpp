#include "dtk/text_format.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace dtk {

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              c == '_' || c == '.' || c == '|';
    if (!ok) return false;
  }
  return true;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) line.tokens.push_back(std::move(cur));
      cur.clear();
    };
    for (char c : raw) {
      if (c == ' ' || c == '\t' || c == '\r') {
        flush();
      } else if (c == '{' || c == '}') {
        flush();
        line.tokens.emplace_back(1, c);
      } else {
        cur.push_back(c);
      }
    }
    flush();
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

void expect_id(const Line& l, const std::string& tok, const char* what) {
  if (!valid_identifier(tok)) throw ParseError(l.number, std::string("invalid ") + what + " '" + tok + "'");
}

enum class Flavour { Ks, Lts, L2ts };

struct Parsed {
  std::vector<std::string> names;
  std::vector<Label> labels;
  std::map<std::string, StateId> index;
  std::vector<std::pair<StateId, StateId>> edges;
  std::vector<std::tuple<StateId, std::string, StateId>> trans;
  std::optional<StateId> sdelta;
  std::size_t sdelta_line = 0;
  std::map<StateId, std::size_t> delta_use_lines;
};

Parsed parse_common(std::string_view text, Flavour flavour) {
  Parsed p;
  auto lines = tokenize(text);
  // States may be declared after they are referenced; resolve in a second pass.
  struct Ref {
    std::size_t line;
    std::string src, action, dst;
  };
  std::vector<Ref> refs;
  std::optional<std::pair<std::size_t, std::string>> sdelta_ref;

  for (const auto& l : lines) {
    const auto& t = l.tokens;
    const auto& head = t[0];
    if (head == "state") {
      if (t.size() < 2) throw ParseError(l.number, "missing state id");
      expect_id(l, t[1], "state id");
      Label label;
      if (flavour == Flavour::Lts) {
        if (t.size() != 2) throw ParseError(l.number, "unexpected tokens after state id");
      } else if (t.size() > 2) {
        if (t[2] != "{" || t.back() != "}")
          throw ParseError(l.number, "expected '{ <prop> ... }' after state id");
        for (std::size_t i = 3; i + 1 < t.size(); ++i) {
          if (t[i] == "{" || t[i] == "}") throw ParseError(l.number, "unbalanced braces");
          expect_id(l, t[i], "proposition");
          label.push_back(t[i]);
        }
      }
      auto id = static_cast<StateId>(p.names.size());
      if (!p.index.emplace(t[1], id).second)
        throw ParseError(l.number, "duplicate state id '" + t[1] + "'");
      for (const auto& prop : label)
        if (prop == kDelta) p.delta_use_lines.emplace(id, l.number);
      p.names.push_back(t[1]);
      p.labels.push_back(make_label(std::move(label)));
    } else if (head == "edge" && flavour == Flavour::Ks) {
      if (t.size() != 3) throw ParseError(l.number, "expected 'edge <src> <dst>'");
      refs.push_back({l.number, t[1], "", t[2]});
    } else if (head == "trans" && flavour != Flavour::Ks) {
      if (t.size() != 4) throw ParseError(l.number, "expected 'trans <src> <action> <dst>'");
      expect_id(l, t[2], "action");
      refs.push_back({l.number, t[1], t[2], t[3]});
    } else if (head == "sdelta" && flavour == Flavour::Ks) {
      if (t.size() != 2) throw ParseError(l.number, "expected 'sdelta <id>'");
      if (sdelta_ref) throw ParseError(l.number, "repeated sdelta directive");
      sdelta_ref.emplace(l.number, t[1]);
    } else {
      throw ParseError(l.number, "unknown directive '" + head + "'");
    }
  }

  auto resolve = [&](std::size_t line, const std::string& name) {
    auto it = p.index.find(name);
    if (it == p.index.end()) throw ParseError(line, "undeclared state '" + name + "'");
    return it->second;
  };
  for (const auto& r : refs) {
    auto s = resolve(r.line, r.src);
    auto d = resolve(r.line, r.dst);
    if (flavour == Flavour::Ks)
      p.edges.emplace_back(s, d);
    else
      p.trans.emplace_back(s, r.action, d);
  }
  if (sdelta_ref) {
    p.sdelta = resolve(sdelta_ref->first, sdelta_ref->second);
    p.sdelta_line = sdelta_ref->first;
  }
  for (auto [state, line] : p.delta_use_lines)
    if (p.sdelta != state)
      throw ParseError(line, "proposition 'delta' is reserved");
  return p;
}

}  // namespace

KripkeStructure parse_ks(std::string_view text) {
  auto p = parse_common(text, Flavour::Ks);
  try {
    return KripkeStructure(std::move(p.names), std::move(p.labels), std::move(p.edges), p.sdelta);
  } catch (const ModelError& e) {
    throw ParseError(p.sdelta_line, e.what());
  }
}

Lts parse_lts(std::string_view text) {
  auto p = parse_common(text, Flavour::Lts);
  return Lts(std::move(p.names), p.trans);
}

DoublyLabelledTS parse_l2ts(std::string_view text) {
  auto p = parse_common(text, Flavour::L2ts);
  return DoublyLabelledTS(Lts(std::move(p.names), p.trans), std::move(p.labels));
}

namespace {
void render_label(std::ostringstream& out, const Label& label) {
  out << " {";
  for (const auto& prop : label) out << ' ' << prop;
  out << " }";
}

void render_transitions(std::ostringstream& out, const Lts& l) {
  for (const auto& t : l.transitions())
    out << "trans " << l.name(t.src) << ' ' << l.action_name(t.action) << ' ' << l.name(t.dst)
        << '\n';
}
}  // namespace

std::string render_ks(const KripkeStructure& k) {
  std::ostringstream out;
  for (StateId s = 0; s < k.size(); ++s) {
    out << "state " << k.name(s);
    render_label(out, k.label(s));
    out << '\n';
  }
  for (auto [a, b] : k.edges()) out << "edge " << k.name(a) << ' ' << k.name(b) << '\n';
  if (k.sdelta()) out << "sdelta " << k.name(*k.sdelta()) << '\n';
  return out.str();
}

std::string render_lts(const Lts& l) {
  std::ostringstream out;
  for (StateId s = 0; s < l.size(); ++s) out << "state " << l.name(s) << '\n';
  render_transitions(out, l);
  return out.str();
}

std::string render_l2ts(const DoublyLabelledTS& d) {
  std::ostringstream out;
  for (StateId s = 0; s < d.size(); ++s) {
    out << "state " << d.name(s);
    render_label(out, d.label(s));
    out << '\n';
  }
  render_transitions(out, d.lts());
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace dtk
