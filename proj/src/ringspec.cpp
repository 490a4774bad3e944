#include "fsplit/ringspec.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "fsplit/numeric.hpp"

namespace fsplit {

namespace {

[[noreturn]] void parse_fail(SourcePos pos, const std::string& msg) {
  fail(ErrorKind::ParseError, std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + msg);
}

SourcePos advance(SourcePos pos, std::size_t offset) {
  pos.column += offset;
  return pos;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

SourceText trim(const SourceText& s) {
  std::size_t b = 0, e = s.text.size();
  while (b < e && is_space(s.text[b])) ++b;
  while (e > b && is_space(s.text[e - 1])) --e;
  return {s.text.substr(b, e - b), advance(s.pos, b)};
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string require_name(const SourceText& s, const char* what) {
  const SourceText t = trim(s);
  if (!t.text.empty() && t.text[0] == '_') parse_fail(t.pos, "names starting with '_' are reserved: '" + t.text + "'");
  if (!is_identifier(t.text)) parse_fail(t.pos, std::string("invalid ") + what + " name '" + t.text + "'");
  return t.text;
}

std::vector<std::string> name_list(const SourceText& value, const char* what) {
  std::vector<std::string> out;
  if (trim(value).text.empty()) return out;
  for (const auto& item : split_list(value)) out.push_back(require_name(item, what));
  return out;
}

bool parse_bool(const SourceText& value) {
  std::string v = trim(value).text;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  parse_fail(trim(value).pos, "expected true or false, got '" + trim(value).text + "'");
}

std::uint64_t parse_unsigned(const SourceText& value) {
  const SourceText t = trim(value);
  if (t.text.empty() || !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    parse_fail(t.pos, "expected a nonnegative integer, got '" + t.text + "'");
  if (t.text.size() > 18) parse_fail(t.pos, "integer too large: " + t.text);
  return std::stoull(t.text);
}

template <CoefficientField F>
class ExpressionParser {
 public:
  using Poly = Polynomial<F>;

  ExpressionParser(const RingPtr<F>& ring, const SourceText& source) : ring_(ring), src_(source) {}

  Poly parse() {
    Poly result = expression();
    skip_space();
    if (at_ < src_.text.size()) error("unexpected '" + std::string(1, src_.text[at_]) + "'");
    return result;
  }

 private:
  void skip_space() {
    while (at_ < src_.text.size() && is_space(src_.text[at_])) ++at_;
  }
  bool accept(char c) {
    skip_space();
    if (at_ < src_.text.size() && src_.text[at_] == c) {
      ++at_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const { parse_fail(advance(src_.pos, at_), msg); }

  Poly expression() {
    Poly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t where = at_;
        Poly d = unary();
        if (!d.is_constant()) {
          at_ = where;
          error("can only divide by constants");
        }
        if (d.is_zero()) {
          at_ = where;
          fail(ErrorKind::DivisionByZero,
               std::to_string(advance(src_.pos, where).line) + ":" +
                   std::to_string(advance(src_.pos, where).column) + ": division by zero");
        }
        acc = acc.scaled(ring_->field().inv(d.constant_coeff()));
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = at_;
      while (at_ < src_.text.size() && std::isdigit(static_cast<unsigned char>(src_.text[at_]))) ++at_;
      if (start == at_) error("expected an exponent");
      if (at_ - start > 9) error("exponent too large");
      base = base.pow(std::stoull(src_.text.substr(start, at_ - start)));
    }
    return base;
  }

  Poly atom() {
    skip_space();
    if (at_ >= src_.text.size()) error("unexpected end of expression");
    const char c = src_.text[at_];
    if (c == '(') {
      ++at_;
      Poly inner = expression();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint32_t p = ring_->field().characteristic();
      std::uint64_t v = 0;
      while (at_ < src_.text.size() && std::isdigit(static_cast<unsigned char>(src_.text[at_])))
        v = (v * 10 + static_cast<std::uint64_t>(src_.text[at_++] - '0')) % p;
      return Poly::constant(ring_, ring_->field().from_int(static_cast<std::int64_t>(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = at_;
      while (at_ < src_.text.size() &&
             (std::isalnum(static_cast<unsigned char>(src_.text[at_])) || src_.text[at_] == '_'))
        ++at_;
      const std::string name = src_.text.substr(start, at_ - start);
      if (name[0] == '_') {
        at_ = start;
        error("names starting with '_' are reserved: '" + name + "'");
      }
      if (auto idx = ring_->index_of(name)) return Poly::variable(ring_, *idx);
      if (auto t = transcendental(name)) return *t;
      at_ = start;
      error("unknown identifier '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::optional<Poly> transcendental(const std::string& name) const {
    if constexpr (std::is_same_v<F, FunctionField>) {
      const auto& names = ring_->field().transcendentals();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return Poly::constant(ring_, ring_->field().transcendental(i));
    }
    return std::nullopt;
  }

  RingPtr<F> ring_;
  SourceText src_;
  std::size_t at_ = 0;
};

}  // namespace

std::vector<SourceText> split_list(const SourceText& value, char separator) {
  std::vector<SourceText> out;
  if (trim(value).text.empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= value.text.size(); ++i) {
    const bool end = i == value.text.size();
    const char c = end ? separator : value.text[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) parse_fail(advance(value.pos, i), "unbalanced ')'");
    if (end && depth > 0) parse_fail(advance(value.pos, i), "missing ')'");
    if (c == separator && depth == 0) {
      SourceText item = trim({value.text.substr(start, i - start), advance(value.pos, start)});
      if (item.text.empty()) parse_fail(item.pos, "empty list entry");
      out.push_back(std::move(item));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::vector<std::string>> parse_prime_list(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : split_list({text, {1, 1}}, '|')) out.push_back(name_list(part, "variable"));
  return out;
}

RingSpec parse_ring_spec(const std::string& text) {
  RingSpec spec;
  std::set<std::string> seen_keys;
  bool have_char = false, have_vars = false;

  // Break into entries at ';' and newlines, dropping comments.
  std::vector<SourceText> entries;
  SourceText current{"", {1, 1}};
  SourcePos pos{1, 1};
  bool comment = false;
  for (char c : text) {
    if (c == '\n' || (c == ';' && !comment)) {
      entries.push_back(current);
      if (c == '\n') {
        ++pos.line;
        pos.column = 1;
        comment = false;
      } else {
        ++pos.column;
      }
      current = {"", pos};
      continue;
    }
    if (c == '#') comment = true;
    if (!comment) current.text += c;
    ++pos.column;
  }
  entries.push_back(current);

  for (const auto& raw : entries) {
    const SourceText entry = trim(raw);
    if (entry.text.empty()) continue;
    const auto eq = entry.text.find('=');
    if (eq == std::string::npos) parse_fail(entry.pos, "expected 'key = value'");
    const std::string key = trim({entry.text.substr(0, eq), entry.pos}).text;
    const SourceText value = trim({entry.text.substr(eq + 1), advance(entry.pos, eq + 1)});
    if (!seen_keys.insert(key).second) parse_fail(entry.pos, "duplicate key '" + key + "'");

    if (key == "char") {
      const std::uint64_t p = parse_unsigned(value);
      if (!is_prime(p) || p > (1u << 30))
        fail(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not a supported prime");
      spec.characteristic = static_cast<std::uint32_t>(p);
      have_char = true;
    } else if (key == "vars") {
      spec.variables = name_list(value, "variable");
      have_vars = true;
    } else if (key == "trans") {
      spec.transcendentals = name_list(value, "transcendental");
    } else if (key == "ideal") {
      if (!value.text.empty()) spec.ideal = split_list(value);
    } else if (key == "equidimensional") {
      spec.flags.equidimensional = parse_bool(value);
    } else if (key == "connected") {
      spec.flags.connected = parse_bool(value);
    } else if (key.starts_with("prime.")) {
      const std::string name = require_name({key.substr(6), advance(entry.pos, 6)}, "prime");
      spec.primes.emplace_back(name, name_list(value, "variable"));
    } else if (key.starts_with("chain.")) {
      const std::string name = require_name({key.substr(6), advance(entry.pos, 6)}, "chain");
      std::vector<std::vector<std::string>> subsets;
      for (const auto& part : split_list(value, '|')) subsets.push_back(name_list(part, "variable"));
      spec.chains.emplace_back(name, std::move(subsets));
    } else if (key == "sop") {
      if (!value.text.empty()) spec.sop = split_list(value);
    } else if (key == "socle") {
      spec.socle = value;
    } else {
      parse_fail(entry.pos, "unknown key '" + key + "'");
    }
  }
  if (!have_char) parse_fail({1, 1}, "missing 'char'");
  if (!have_vars) parse_fail({1, 1}, "missing 'vars'");

  std::set<std::string> names;
  for (const auto* list : {&spec.variables, &spec.transcendentals})
    for (const auto& n : *list)
      if (!names.insert(n).second) fail(ErrorKind::DuplicateVariable, "name '" + n + "' declared twice");
  return spec;
}

RingSpec load_ring_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_spec(buf.str());
}

template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, const SourceText& source) {
  return ExpressionParser<F>(ring, source).parse();
}

namespace {

template <CoefficientField F>
F make_field(const RingSpec& spec) {
  if constexpr (std::is_same_v<F, FunctionField>) return FunctionField(spec.characteristic, spec.transcendentals);
  else return PrimeField(spec.characteristic);
}

}  // namespace

template <CoefficientField F>
Presentation<F> build_presentation(const RingSpec& spec) {
  auto ring = make_ring(make_field<F>(spec), spec.variables);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : spec.ideal) gens.push_back(parse_polynomial(ring, g));
  Presentation<F> out{ring, IdealPresentation<F>(ring, std::move(gens)), {}, std::nullopt};
  for (const auto& s : spec.sop) out.sop.push_back(parse_polynomial(ring, s));
  if (spec.socle) out.socle = parse_polynomial(ring, *spec.socle);
  return out;
}

template Polynomial<PrimeField> parse_polynomial(const RingPtr<PrimeField>&, const SourceText&);
template Polynomial<FunctionField> parse_polynomial(const RingPtr<FunctionField>&, const SourceText&);
template Presentation<PrimeField> build_presentation(const RingSpec&);
template Presentation<FunctionField> build_presentation(const RingSpec&);

}  // namespace fsplit
