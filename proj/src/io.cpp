#include "waring/io.hpp"

#include <algorithm>
#include <cctype>

namespace waring {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Cursor over a string with positions reported relative to `base`.
struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  std::size_t base = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(base + pos, what); }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::string(s.substr(start, pos - start));
  }
  long small_int() {
    const std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return std::stol(d);
  }
};

Rational parse_unsigned_rational(Cursor& c) {
  const mpz_class num(c.digits());
  if (c.peek() == '/') {
    ++c.pos;
    const mpz_class den(c.digits());
    if (den == 0) c.fail("zero denominator");
    return Rational(mpq_class(num, den));
  }
  return Rational(num);
}

// Body of a cyclotomic literal: sum of [rational ['*']] [z ['^' int]].
Cyclotomic parse_zexpr(Cursor& c, int m) {
  std::vector<Rational> coeffs(1, Rational(0));
  bool first = true;
  while (!c.at_end() && c.peek() != ')') {
    bool negative = false;
    if (c.accept('-')) {
      negative = true;
    } else if (!c.accept('+') && !first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = parse_unsigned_rational(c);
      any = true;
      if (c.peek() == '*') ++c.pos;
    }
    long power = 0;
    if (c.peek() == 'z') {
      ++c.pos;
      power = 1;
      any = true;
      if (c.accept('^')) power = c.small_int();
    }
    if (!any) c.fail("expected a coefficient or z");
    if (negative) coef = -coef;
    if (static_cast<std::size_t>(power) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(power) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(power)] += coef;
  }
  return Cyclotomic(m, std::move(coeffs));
}

// "{m:M}(...)" starting at the '{'.
Cyclotomic parse_cyclotomic_literal(Cursor& c, bool allow_bare) {
  c.expect('{');
  if (c.peek() != 'm') c.fail("expected 'm:' in field declaration");
  ++c.pos;
  c.expect(':');
  const long m = c.small_int();
  if (m < 1) c.fail("conductor must be positive");
  c.expect('}');
  if (c.accept('(')) {
    Cyclotomic v = parse_zexpr(c, static_cast<int>(m));
    c.expect(')');
    return v;
  }
  if (!allow_bare) c.fail("expected '(' after field declaration");
  return parse_zexpr(c, static_cast<int>(m));
}

class PolyParser {
 public:
  PolyParser(std::string_view text, int nvars) : c_{text}, nvars_(nvars) { scan_variables(); }

  Form parse() {
    Form f = expr();
    if (!c_.at_end()) c_.fail("unexpected character '" + std::string(1, c_.peek()) + "'");
    return f;
  }

 private:
  // Fixes the arity and side from the variables that occur.
  void scan_variables() {
    int max_index = -1;
    std::optional<Side> side;
    const std::string_view s = c_.s;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '{') {
        // Skip a cyclotomic literal.
        std::size_t close = s.find('}', i);
        if (close == std::string_view::npos) throw SyntaxError(i, "unterminated field declaration");
        i = close;
        std::size_t j = close + 1;
        while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j < s.size() && s[j] == '(') {
          const std::size_t end = s.find(')', j);
          if (end == std::string_view::npos) throw SyntaxError(j, "unterminated cyclotomic literal");
          i = end;
        }
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(s[i]))) continue;
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      const std::string_view word = s.substr(i, j - i);
      if (word != "expand") {
        const auto [index, var_side] = variable(word, i);
        if (side && *side != var_side) throw SyntaxError(i, "mixed primal and dual variables");
        side = var_side;
        max_index = std::max(max_index, index);
      }
      i = j - 1;
    }
    side_ = side.value_or(Side::Primal);
    if (nvars_ == 0) nvars_ = std::max(2, max_index + 1);
    if (max_index >= nvars_)
      throw Error(ErrorCode::ArityMismatch, "variable index " + std::to_string(max_index) + " exceeds " +
                                                std::to_string(nvars_) + " variables");
  }

  static std::pair<int, Side> variable(std::string_view word, std::size_t pos) {
    const char head = word[0];
    const Side side = std::isupper(static_cast<unsigned char>(head)) ? Side::Dual : Side::Primal;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(head)));
    if (word.size() == 1) {
      if (lower == 'x') return {0, side};
      if (lower == 'y') return {1, side};
      if (lower == 'z') return {2, side};
    } else if (lower == 'x' && std::all_of(word.begin() + 1, word.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
               word.size() <= 4) {
      return {std::stoi(std::string(word.substr(1))), side};
    }
    throw SyntaxError(pos, "unknown identifier '" + std::string(word) + "'");
  }

  Form constant(const Cyclotomic& a) const {
    return Form::monomial(Exponent(static_cast<std::size_t>(nvars_), 0), a, side_);
  }

  Form expr() {
    std::optional<Form> sum;
    bool negative = false;
    if (c_.accept('-')) negative = true;
    else c_.accept('+');
    for (;;) {
      Form t = term();
      if (negative) t *= Cyclotomic(-1);
      if (!sum) {
        sum = std::move(t);
      } else {
        if (t.degree() != sum->degree()) throw NonHomogeneous(sum->degree(), t.degree());
        *sum += t;
      }
      if (c_.accept('+')) negative = false;
      else if (c_.accept('-')) negative = true;
      else break;
    }
    return *sum;
  }

  Form term() {
    Form acc = factor();
    while (c_.accept('*')) acc = acc * factor();
    return acc;
  }

  Form factor() {
    const char ch = c_.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) return constant(Cyclotomic(parse_unsigned_rational(c_)));
    if (ch == '{') return constant(parse_cyclotomic_literal(c_, false));
    if (ch == '(') c_.fail("parenthesized expressions are only allowed as expand((...)^n)");
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = c_.pos;
      std::size_t j = start;
      while (j < c_.s.size() && std::isalnum(static_cast<unsigned char>(c_.s[j]))) ++j;
      const std::string_view word = c_.s.substr(start, j - start);
      c_.pos = j;
      if (word == "expand") return expand();
      const int index = variable(word, start).first;
      long power = 1;
      if (c_.accept('^')) power = c_.small_int();
      Exponent e(static_cast<std::size_t>(nvars_), 0);
      e[static_cast<std::size_t>(index)] = static_cast<int>(power);
      return Form::monomial(e, Cyclotomic(1), side_);
    }
    if (ch == '\0') c_.fail("unexpected end of input");
    c_.fail("unexpected character '" + std::string(1, ch) + "'");
  }

  Form expand() {
    c_.expect('(');
    c_.expect('(');
    const Form base = expr();
    c_.expect(')');
    c_.expect('^');
    const long n = c_.small_int();
    c_.expect(')');
    Form out = constant(Cyclotomic(1));
    for (long i = 0; i < n; ++i) out = out * base;
    return out;
  }

  Cursor c_;
  int nvars_;
  Side side_ = Side::Primal;
};

}  // namespace

Cyclotomic parse_scalar(std::string_view text) {
  Cursor c{text};
  if (c.at_end()) c.fail("empty scalar");
  Cyclotomic v;
  if (c.peek() == '{') {
    v = parse_cyclotomic_literal(c, true);
  } else {
    const bool negative = c.accept('-');
    if (!negative) c.accept('+');
    Rational r = parse_unsigned_rational(c);
    v = Cyclotomic(negative ? -r : r);
  }
  if (!c.at_end()) c.fail("trailing characters in scalar");
  return v;
}

std::string format_scalar(const Cyclotomic& a) { return a.str(); }

Form parse_poly(std::string_view text, int nvars) {
  if (trim(text).empty()) throw SyntaxError(0, "empty polynomial");
  return PolyParser(text, nvars).parse();
}

std::string format_poly(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string mono;
    for (int i = 0; i < f.nvars(); ++i) {
      const int a = e[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(f.nvars(), i, f.side());
      if (a > 1) mono += "^" + std::to_string(a);
    }
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      const Rational q = c.rational_value();
      negative = q.sign() < 0;
      const Rational mag = q.abs();
      if (mono.empty()) body = mag.str();
      else if (mag == Rational(1)) body = mono;
      else body = mag.str() + "*" + mono;
    } else {
      body = c.str() + (mono.empty() ? "" : "*" + mono);
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += body;
    first = false;
  }
  return out;
}

std::vector<Cyclotomic> parse_scalar_list(std::string_view text) {
  std::vector<Cyclotomic> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_scalar(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Point parse_point(std::string_view text) {
  const auto c = parse_scalar_list(text);
  Vector<Cyclotomic> v(static_cast<Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Index>(i)) = c[i];
  return Point(v);
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (const auto& a : parse_scalar_list(text)) {
    if (!a.is_rational() || !a.rational_value().is_integer())
      throw Error(ErrorCode::InvalidArgument, "expected integers, got " + a.str());
    out.push_back(static_cast<int>(a.rational_value().numerator().get_si()));
  }
  return out;
}

Json scalar_json(const Cyclotomic& a) {
  if (a.is_rational()) {
    const Rational q = a.rational_value();
    if (q.is_integer() && q.numerator().fits_slong_p()) return Json(q.numerator().get_si());
  }
  return Json(a.str());
}

Cyclotomic scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw Error(ErrorCode::InvalidArgument, "scalar must be an integer or a string, got " + j.dump());
}

Json point_json(const Point& p) {
  Json a = Json::array();
  for (int i = 0; i < p.nvars(); ++i) a.push_back(scalar_json(p[i]));
  return a;
}

Json pointset_json(const Points& x) {
  Json pts = Json::array();
  for (const auto& p : x.points()) pts.push_back(point_json(p));
  return Json{{"schema", "pointset-v1"}, {"nvars", x.nvars()}, {"points", pts}};
}

Points pointset_from_json(const Json& j) {
  const Json* arr = &j;
  int nvars = 0;
  if (j.is_object()) {
    if (j.contains("schema") && j["schema"] != "pointset-v1")
      throw Error(ErrorCode::InvalidArgument, "expected schema pointset-v1, got " + j["schema"].dump());
    if (!j.contains("points")) throw Error(ErrorCode::InvalidArgument, "point set needs a \"points\" array");
    arr = &j["points"];
    if (j.contains("nvars")) nvars = j["nvars"].get<int>();
  }
  if (!arr->is_array()) throw Error(ErrorCode::InvalidArgument, "points must be an array");
  std::vector<Point> pts;
  for (const auto& p : *arr) {
    if (!p.is_array()) throw Error(ErrorCode::InvalidArgument, "each point must be an array of coordinates");
    Vector<Cyclotomic> v(static_cast<Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<Index>(i)) = scalar_from_json(p[i]);
    pts.emplace_back(v);
  }
  if (nvars == 0) nvars = pts.empty() ? 3 : pts.front().nvars();
  return Points(nvars, std::move(pts));
}

Json dh_json(const DhSequence& dh) {
  Json plateaus = Json::array();
  for (const auto& p : detect_plateaus(dh)) plateaus.push_back({{"t0", p.t0}, {"height", p.height}});
  return Json{{"schema", "dh-v1"},
              {"dh", dh.values},
              {"source", dh.source == DhSequence::Source::Computed ? "computed" : "declared"},
              {"total", dh.total()},
              {"plateaus", plateaus}};
}

Json resolution_json(const ResolutionDegrees& res) {
  return Json{{"generators", res.generators}, {"syzygies", res.syzygies}};
}

Json decomposition_json(const Decomposition& dec) {
  Json j{{"schema", "decomposition-v1"},
         {"f", format_poly(dec.target)},
         {"d", dec.degree()},
         {"status", std::string(status_name(dec.status))}};
  Json pts = Json::array(), coeffs = Json::array();
  if (dec.numeric && dec.status != DecompositionStatus::VerifiedExact) {
    auto cx = [](std::complex<double> z) { return Json::array({z.real(), z.imag()}); };
    for (const auto& p : dec.numeric->points) {
      Json q = Json::array();
      for (const auto& z : p) q.push_back(cx(z));
      pts.push_back(q);
    }
    for (const auto& c : dec.numeric->coeffs) coeffs.push_back(cx(c));
    j["points"] = pts;
    j["coeffs"] = coeffs;
    j["residual"] = dec.numeric->residual;
  } else {
    for (const auto& p : dec.points.points()) pts.push_back(point_json(p));
    for (const auto& c : dec.coeffs) coeffs.push_back(scalar_json(c));
    j["points"] = pts;
    j["coeffs"] = coeffs;
  }
  j["length"] = dec.length();
  return j;
}

Json certificate_json(const RankCertificate& cert) {
  Json lower = Json::array();
  for (const auto& b : cert.lower_bounds)
    lower.push_back({{"value", b.value}, {"provenance", std::string(provenance_name(b.provenance))}, {"method", b.method}});
  Json j{{"schema", "certificate-v1"}, {"f", format_poly(cert.target)}, {"claimed_rank", cert.claimed_rank}};
  if (cert.lambda0) j["lambda0"] = scalar_json(*cert.lambda0);
  if (cert.upper_bound) {
    j["upper_bound"] = {{"value", cert.upper_bound->length()},
                        {"provenance", std::string(provenance_name(cert.upper_provenance))},
                        {"decomposition", decomposition_json(*cert.upper_bound)}};
  }
  j["lower_bounds"] = lower;
  j["machine_certified"] = cert.machine_certified();
  return j;
}

Json error_json(const Error& e) {
  Json err{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) err["position"] = s->position();
  if (const auto* h = dynamic_cast<const NonHomogeneous*>(&e)) err["degrees"] = {h->first_degree(), h->second_degree()};
  if (const auto* n = dynamic_cast<const NotInSpanError*>(&e)) err["certificate"] = format_poly(n->certificate());
  return Json{{"schema", "error-v1"}, {"error", err}};
}

std::string render_dh(const DhSequence& outer, const std::optional<DhSequence>& inner) {
  int height = 0;
  for (int v : outer.values) height = std::max(height, v);
  if (inner)
    for (int v : inner->values) height = std::max(height, v);
  const int width = std::max(outer.size(), inner ? inner->size() : 0);
  std::string out;
  for (int r = height; r >= 1; --r) {
    std::string line;
    for (int t = 0; t < width; ++t) {
      char ch = ' ';
      if (inner) {
        if (r <= inner->at(t)) ch = '#';
        else if (r <= outer.at(t)) ch = 'o';
      } else if (r <= outer.at(t)) {
        ch = '#';
      }
      line += ch;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  for (int t = 0; t < width; ++t) out += static_cast<char>('0' + t % 10);
  return out + "\n";
}

std::string join_ints(const std::vector<int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace waring
