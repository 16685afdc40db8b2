#include "taudiff/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace taudiff {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_ident_start(s.front())) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
std::string join(const std::vector<T>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

constexpr unsigned kMaxExponent = 100000;

class ExprParser {
 public:
  ExprParser(std::string_view text, const RingCtxPtr& ctx, int line, int column)
      : text_(text), ctx_(ctx), line_(line), column_(column) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (is_ident_start(c) || is_digit(c) || c == '(') fail("missing operator before '" + std::string(1, c) + "'");
      fail("unexpected '" + std::string(1, c) + "'");
    }
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw SyntaxError(msg, line_, column_ + static_cast<int>(pos));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        const Poly d = unary();
        if (!d.is_constant()) fail_at(at, "divisor must be an element of the base field");
        if (d.is_zero()) {
          throw Error(ErrorKind::DivisionByZero, "line " + std::to_string(line_) + ", column " +
                                                     std::to_string(column_ + static_cast<int>(at)) +
                                                     ": division by zero");
        }
        acc = acc.scaled(d.constant_value().inverse());
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("exponent must be a non-negative integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) fail_at(start, "exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      return Poly(ctx_, FieldElem(Rat(std::string(text_.substr(start, pos_ - start)))));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto i = ctx_->index_of(name)) return Poly::variable(ctx_, *i);
      if (auto s = ctx_->base().index_of(name)) return Poly(ctx_, ctx_->base().gen(*s));
      throw Error(ErrorKind::UnknownSymbol, "line " + std::to_string(line_) + ", column " +
                                                std::to_string(column_ + static_cast<int>(start)) +
                                                ": unknown symbol '" + name + "'");
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingCtxPtr& ctx_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

// Split at commas outside parentheses; each piece keeps its offset.
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.emplace_back(text.substr(start, i - start), start);
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      --depth;
    }
  }
  return out;
}

// Leading whitespace count, so columns point at the first real character.
std::size_t leading_ws(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::vector<std::string> parse_name_list(std::string_view text, int line, int column) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  for (const auto& [piece, off] : split_top_level(text)) {
    const std::string_view name = trim(piece);
    if (!is_identifier(name)) {
      throw SyntaxError("expected an identifier, got '" + std::string(name) + "'", line,
                        column + static_cast<int>(off + leading_ws(piece)));
    }
    out.emplace_back(name);
  }
  return out;
}

}  // namespace

Poly parse_poly(std::string_view text, const RingCtxPtr& ctx, int line, int column) {
  return ExprParser(text, ctx, line, column).parse();
}

FieldElem parse_field_elem(std::string_view text, const BaseFieldPtr& field, int line, int column) {
  const RingCtxPtr k = make_ring(field, {});
  return ExprParser(text, k, line, column).parse().constant_value();
}

std::vector<FieldElem> parse_point(std::string_view text, const BaseFieldPtr& field, int line, int column) {
  std::vector<FieldElem> out;
  if (trim(text).empty()) return out;
  for (const auto& [piece, off] : split_top_level(text)) {
    out.push_back(parse_field_elem(piece, field, line, column + static_cast<int>(off)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// problem files

const MorphismDecl* ProblemFile::find_morphism(std::string_view name) const {
  for (const auto& m : morphisms) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const PresentedAlgebra& ProblemFile::source_of(const MorphismDecl& m) const {
  if (m.source == "X") return algebra;
  const MorphismDecl* s = find_morphism(m.source);
  if (s == nullptr) throw Error(ErrorKind::InvalidArgument, "unknown morphism '" + m.source + "'");
  return s->target;
}

Morphism ProblemFile::morphism(const MorphismDecl& m) const { return Morphism{source_of(m), m.target, m.images}; }

namespace {

struct Line {
  int number;
  std::string text;
};

struct Section {
  std::string name;  // "field", "ring", ... or "morphism"
  std::string arg;   // morphism name
  int header_line;
  std::vector<Line> lines;
};

struct KeyValue {
  std::string key;
  std::string_view value;
  int value_column;
};

KeyValue split_key_value(const Line& l) {
  const auto eq = l.text.find('=');
  if (eq == std::string::npos) throw SyntaxError("expected 'key = value'", l.number, 1);
  KeyValue kv;
  kv.key = std::string(trim(std::string_view(l.text).substr(0, eq)));
  const std::string_view rest = std::string_view(l.text).substr(eq + 1);
  const std::size_t ws = leading_ws(rest);
  kv.value = trim(rest);
  kv.value_column = static_cast<int>(eq + 2 + ws);
  return kv;
}

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string_view t = trim(raw);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw SyntaxError("unterminated section header", number, 1);
      const std::string_view inner = trim(t.substr(1, t.size() - 2));
      Section s;
      s.header_line = number;
      const auto space = inner.find_first_of(" \t");
      s.name = std::string(inner.substr(0, space));
      if (space != std::string_view::npos) s.arg = std::string(trim(inner.substr(space)));
      static const std::vector<std::string> known{"field", "ring", "ideal", "points", "morphism", "assert"};
      if (std::find(known.begin(), known.end(), s.name) == known.end()) {
        throw SyntaxError("unknown section '" + s.name + "'", number, 1);
      }
      if (s.name == "morphism" && !is_identifier(s.arg)) {
        throw SyntaxError("morphism section needs a name", number, 1);
      }
      if (s.name != "morphism" && !s.arg.empty()) throw SyntaxError("unexpected text in header", number, 1);
      for (const auto& o : sections) {
        if (o.name == s.name && o.arg == s.arg) {
          throw SyntaxError("duplicate section '" + std::string(inner) + "'", number, 1);
        }
      }
      sections.push_back(std::move(s));
      continue;
    }
    if (sections.empty()) throw SyntaxError("text before the first section", number, 1);
    sections.back().lines.push_back(Line{number, raw});
  }
  return sections;
}

const Section* find_section(const std::vector<Section>& sections, const std::string& name) {
  for (const auto& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

bool parse_bool(const KeyValue& kv, int line) {
  if (kv.value == "true") return true;
  if (kv.value == "false") return false;
  throw SyntaxError("expected true or false", line, kv.value_column);
}

BaseFieldPtr parse_field_section(const Section& s) {
  std::optional<std::vector<std::string>> symbols;
  std::map<std::string, std::pair<std::string, std::pair<int, int>>> images;  // name -> (text, (line, col))
  std::optional<std::pair<std::string, int>> designated;
  static const std::regex derivation_key(R"(d\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*\))");
  for (const auto& l : s.lines) {
    const KeyValue kv = split_key_value(l);
    std::smatch m;
    if (kv.key == "symbols") {
      symbols = parse_name_list(kv.value, l.number, kv.value_column);
    } else if (kv.key == "designated") {
      designated = std::make_pair(std::string(kv.value), l.number);
    } else if (std::regex_match(kv.key, m, derivation_key)) {
      images[m[1]] = {std::string(kv.value), {l.number, kv.value_column}};
    } else {
      throw SyntaxError("unknown key '" + kv.key + "' in [field]", l.number, 1);
    }
  }
  if (!symbols || symbols->empty()) throw SyntaxError("[field] needs a nonempty symbols list", s.header_line, 1);
  // names only, to parse the derivation images
  const auto names_only = std::make_shared<const BaseField>(
      *symbols, std::vector<FieldElem>(symbols->size(), FieldElem(1)), 0);
  std::vector<FieldElem> values;
  for (const auto& name : *symbols) {
    auto it = images.find(name);
    if (it == images.end()) throw SyntaxError("missing d(" + name + ")", s.header_line, 1);
    values.push_back(parse_field_elem(it->second.first, names_only, it->second.second.first,
                                      it->second.second.second));
    images.erase(it);
  }
  if (!images.empty()) {
    const auto& [name, info] = *images.begin();
    throw Error(ErrorKind::UnknownSymbol,
                "line " + std::to_string(info.second.first) + ": d(" + name + ") names no field symbol");
  }
  std::size_t index = 0;
  if (designated) {
    auto it = std::find(symbols->begin(), symbols->end(), designated->first);
    if (it == symbols->end()) {
      throw Error(ErrorKind::UnknownSymbol, "line " + std::to_string(designated->second) +
                                                ": designated symbol '" + designated->first + "' is not declared");
    }
    index = static_cast<std::size_t>(it - symbols->begin());
  } else {
    auto it = std::find_if(values.begin(), values.end(), [](const FieldElem& v) { return v.is_one(); });
    if (it == values.end()) throw SyntaxError("no symbol e with d(e) = 1", s.header_line, 1);
    index = static_cast<std::size_t>(it - values.begin());
  }
  return std::make_shared<const BaseField>(*symbols, std::move(values), index);
}

}  // namespace

ProblemFile parse_problem(std::string_view text, const ParseOptions& options) {
  const std::vector<Section> sections = split_sections(text);
  const Section* field_s = find_section(sections, "field");
  const Section* ring_s = find_section(sections, "ring");
  if (field_s == nullptr) throw SyntaxError("missing [field] section", 1, 1);
  if (ring_s == nullptr) throw SyntaxError("missing [ring] section", 1, 1);

  BaseFieldPtr field = parse_field_section(*field_s);

  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::degrevlex;
  bool have_vars = false;
  for (const auto& l : ring_s->lines) {
    const KeyValue kv = split_key_value(l);
    if (kv.key == "vars") {
      vars = parse_name_list(kv.value, l.number, kv.value_column);
      have_vars = true;
    } else if (kv.key == "order") {
      if (kv.value == "degrevlex") {
        order = MonomialOrder::degrevlex;
      } else if (kv.value == "lex") {
        order = MonomialOrder::lex;
      } else {
        throw SyntaxError("order must be degrevlex or lex", l.number, kv.value_column);
      }
    } else {
      throw SyntaxError("unknown key '" + kv.key + "' in [ring]", l.number, 1);
    }
  }
  if (!have_vars) throw SyntaxError("[ring] needs a vars line", ring_s->header_line, 1);
  if (options.order) order = *options.order;
  const RingCtxPtr ring = make_ring(field, vars, order);

  std::vector<Poly> gens;
  if (const Section* s = find_section(sections, "ideal")) {
    for (const auto& l : s->lines) {
      const std::size_t ws = leading_ws(l.text);
      gens.push_back(parse_poly(trim(l.text), ring, l.number, static_cast<int>(ws + 1)));
    }
  }

  ProblemFile p{field, PresentedAlgebra(ring, std::move(gens), options.limits), {}, {}, {}};

  if (const Section* s = find_section(sections, "points")) {
    for (const auto& l : s->lines) {
      auto pt = parse_point(l.text, field, l.number, 1);
      if (pt.size() != vars.size()) {
        throw SyntaxError("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                              std::to_string(vars.size()),
                          l.number, 1);
      }
      p.points.push_back(std::move(pt));
    }
  }

  static const std::regex image_key(R"(image\s+([A-Za-z_][A-Za-z0-9_]*))");
  for (const auto& s : sections) {
    if (s.name != "morphism") continue;
    std::optional<std::string> source;
    std::optional<std::vector<std::string>> target_vars;
    std::vector<const Line*> ideal_lines;
    std::vector<std::pair<std::string, const Line*>> image_lines;
    for (const auto& l : s.lines) {
      const KeyValue kv = split_key_value(l);
      std::smatch m;
      if (kv.key == "source") {
        source = std::string(kv.value);
      } else if (kv.key == "target") {
        target_vars = parse_name_list(kv.value, l.number, kv.value_column);
      } else if (kv.key == "target_ideal") {
        ideal_lines.push_back(&l);
      } else if (std::regex_match(kv.key, m, image_key)) {
        image_lines.emplace_back(m[1], &l);
      } else {
        throw SyntaxError("unknown key '" + kv.key + "' in [morphism " + s.arg + "]", l.number, 1);
      }
    }
    if (!source) throw SyntaxError("morphism '" + s.arg + "' needs a source", s.header_line, 1);
    if (!target_vars) throw SyntaxError("morphism '" + s.arg + "' needs a target", s.header_line, 1);
    if (*source != "X" && p.find_morphism(*source) == nullptr) {
      throw SyntaxError("source '" + *source + "' is neither X nor an earlier morphism", s.header_line, 1);
    }
    const RingCtxPtr tctx = make_ring(field, *target_vars, order);
    std::vector<Poly> tgens;
    for (const Line* l : ideal_lines) {
      const KeyValue kv = split_key_value(*l);
      tgens.push_back(parse_poly(kv.value, tctx, l->number, kv.value_column));
    }
    MorphismDecl decl{s.arg, *source, PresentedAlgebra(tctx, std::move(tgens), options.limits), {}};
    const RingCtxPtr sctx = p.source_of(decl).ctx();
    std::vector<std::optional<Poly>> images(target_vars->size());
    for (const auto& [name, l] : image_lines) {
      const auto idx = tctx->index_of(name);
      if (!idx) throw SyntaxError("'" + name + "' is not a target variable", l->number, 1);
      if (images[*idx]) throw SyntaxError("second image for '" + name + "'", l->number, 1);
      const KeyValue kv = split_key_value(*l);
      images[*idx] = parse_poly(kv.value, sctx, l->number, kv.value_column);
    }
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (!images[j]) throw SyntaxError("missing image of '" + (*target_vars)[j] + "'", s.header_line, 1);
      decl.images.push_back(*images[j]);
    }
    p.morphisms.push_back(std::move(decl));
  }

  if (const Section* s = find_section(sections, "assert")) {
    for (const auto& l : s->lines) {
      const KeyValue kv = split_key_value(l);
      if (kv.key == "prime") {
        p.assertions.prime = parse_bool(kv, l.number);
      } else if (kv.key == "smooth") {
        p.assertions.smooth = parse_bool(kv, l.number);
      } else if (kv.key == "dim") {
        const std::string v(kv.value);
        if (v.empty() || !std::all_of(v.begin(), v.end(), is_digit) || v.size() > 6) {
          throw SyntaxError("dim must be a non-negative integer", l.number, kv.value_column);
        }
        p.assertions.dim = std::stoul(v);
      } else {
        throw SyntaxError("unknown key '" + kv.key + "' in [assert]", l.number, 1);
      }
    }
  }
  return p;
}

ProblemFile load_problem(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), options);
}

std::string print_problem(const ProblemFile& p) {
  std::ostringstream os;
  const BaseField& k = *p.field;
  os << "[field]\nsymbols = " << join(k.symbols(), ", ") << "\n";
  for (std::size_t i = 0; i < k.size(); ++i) {
    os << "d(" << k.symbol_name(i) << ") = " << k.format(k.derivation_image(i)) << "\n";
  }
  os << "designated = " << k.symbol_name(k.designated()) << "\n";
  os << "\n[ring]\nvars = " << join(p.ring()->vars(), ", ") << "\norder = " << to_string(p.ring()->order())
     << "\n";
  os << "\n[ideal]\n";
  for (const auto& g : p.algebra.gens()) os << to_string(g) << "\n";
  if (!p.points.empty()) {
    os << "\n[points]\n";
    for (const auto& pt : p.points) {
      std::vector<std::string> coords;
      for (const auto& c : pt) coords.push_back(k.format(c));
      os << join(coords, ", ") << "\n";
    }
  }
  for (const auto& m : p.morphisms) {
    os << "\n[morphism " << m.name << "]\nsource = " << m.source << "\ntarget = "
       << join(m.target.ctx()->vars(), ", ") << "\n";
    for (const auto& g : m.target.gens()) os << "target_ideal = " << to_string(g) << "\n";
    for (std::size_t j = 0; j < m.images.size(); ++j) {
      os << "image " << m.target.ctx()->var_name(j) << " = " << to_string(m.images[j]) << "\n";
    }
  }
  const Assertions& a = p.assertions;
  if (a.prime || a.smooth || a.dim) {
    os << "\n[assert]\n";
    if (a.prime) os << "prime = " << (*a.prime ? "true" : "false") << "\n";
    if (a.smooth) os << "smooth = " << (*a.smooth ? "true" : "false") << "\n";
    if (a.dim) os << "dim = " << *a.dim << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// presentations and varieties

namespace {

std::string row_text(const std::vector<Poly>& row) {
  std::vector<std::string> parts;
  for (const auto& e : row) parts.push_back(to_string(e));
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

std::string print_presentation(const ModulePresentation& m, bool canonical) {
  std::string out = "free: " + join(m.basis_labels, ", ") + "; relations: ";
  std::vector<std::vector<Poly>> rows = m.relations.row_data();
  if (canonical) {
    struct Keyed {
      std::size_t col;
      std::vector<Poly> row;
      std::string text;
    };
    std::vector<Keyed> keyed;
    for (auto& row : rows) {
      auto first = std::find_if(row.begin(), row.end(), [](const Poly& p) { return !p.is_zero(); });
      if (first == row.end()) continue;
      const FieldElem inv = first->leading_coefficient().inverse();
      const auto col = static_cast<std::size_t>(first - row.begin());
      for (auto& e : row) e = e.scaled(inv);
      std::string text = row_text(row);
      keyed.push_back(Keyed{col, std::move(row), std::move(text)});
    }
    const RingCtx& ctx = *m.algebra.ctx();
    std::sort(keyed.begin(), keyed.end(), [&](const Keyed& a, const Keyed& b) {
      if (a.col != b.col) return a.col < b.col;
      const int c = ctx.compare(a.row[a.col].leading_exponents(), b.row[b.col].leading_exponents());
      if (c != 0) return c > 0;
      return a.text < b.text;
    });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const Keyed& a, const Keyed& b) { return a.text == b.text; }),
                keyed.end());
    rows.clear();
    for (auto& k : keyed) rows.push_back(std::move(k.row));
  }
  if (rows.empty()) return out + "(none)";
  std::vector<std::string> parts;
  for (const auto& r : rows) parts.push_back(row_text(r));
  return out + join(parts, ", ");
}

ModulePresentation parse_presentation(std::string_view text, const PresentedAlgebra& algebra) {
  const std::string_view t = trim(text);
  if (t.substr(0, 5) != "free:") throw SyntaxError("expected 'free:'", 1, 1);
  const auto rel = t.find("; relations:");
  if (rel == std::string_view::npos) throw SyntaxError("expected '; relations:'", 1, 1);
  const std::vector<std::string> labels = parse_name_list(t.substr(5, rel - 5), 1, 6);
  const std::size_t body_start = rel + std::string_view("; relations:").size();
  const std::string_view body = t.substr(body_start);
  QuotientMatrix rows(algebra, labels.size());
  if (trim(body) != "(none)") {
    for (const auto& [piece, off] : split_top_level(body)) {
      const std::string_view r = trim(piece);
      const int col = static_cast<int>(body_start + off + leading_ws(piece) + 1);
      if (r.size() < 2 || r.front() != '(' || r.back() != ')') throw SyntaxError("expected '(...)'", 1, col);
      std::vector<Poly> row;
      for (const auto& [entry, eoff] : split_top_level(r.substr(1, r.size() - 2))) {
        row.push_back(parse_poly(entry, algebra.ctx(), 1, col + 1 + static_cast<int>(eoff)));
      }
      if (row.size() != labels.size()) {
        throw SyntaxError("row has " + std::to_string(row.size()) + " entries, expected " +
                              std::to_string(labels.size()),
                          1, col);
      }
      rows.add_row(std::move(row));
    }
  }
  return ModulePresentation{algebra, labels.size(), std::move(rows), labels};
}

std::string print_variety(std::string_view label, const PresentedAlgebra& v, bool canonical) {
  std::string out = std::string(label) + ": " + join(v.ctx()->vars(), ", ") + "; ideal: ";
  const std::vector<Poly>& gens = canonical ? v.groebner_basis() : v.gens();
  if (gens.empty()) return out + "(none)";
  std::vector<std::string> parts;
  for (const auto& g : gens) parts.push_back(to_string(g));
  return out + join(parts, ", ");
}

std::string print_cone(const ConeAlgebra& cone, bool canonical) {
  return print_variety("cone", cone.cone_ideal, canonical);
}

std::string print_slice(const SlicedVariety& v, bool canonical) {
  return print_variety(to_string(v.slice), v.ideal, canonical);
}

ParsedVariety parse_variety(std::string_view text, const BaseFieldPtr& field, MonomialOrder order) {
  const std::string_view t = trim(text);
  const auto colon = t.find(':');
  if (colon == std::string_view::npos) throw SyntaxError("expected '<label>:'", 1, 1);
  const auto ideal = t.find("; ideal:");
  if (ideal == std::string_view::npos || ideal < colon) throw SyntaxError("expected '; ideal:'", 1, 1);
  ParsedVariety out{std::string(trim(t.substr(0, colon))),
                    PresentedAlgebra(make_ring(field, parse_name_list(t.substr(colon + 1, ideal - colon - 1), 1,
                                                                      static_cast<int>(colon + 2)),
                                               order))};
  const std::size_t body_start = ideal + std::string_view("; ideal:").size();
  const std::string_view body = t.substr(body_start);
  std::vector<Poly> gens;
  if (trim(body) != "(none)") {
    for (const auto& [piece, off] : split_top_level(body)) {
      gens.push_back(parse_poly(piece, out.algebra.ctx(), 1, static_cast<int>(body_start + off + 1)));
    }
  }
  out.algebra = PresentedAlgebra(out.algebra.ctx(), std::move(gens));
  return out;
}

}  // namespace taudiff
