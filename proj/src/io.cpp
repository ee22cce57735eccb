#include "delzant/io.hpp"

#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "delzant/error.hpp"

namespace delzant {

namespace {

using json = nlohmann::json;

// Marks float literals that were kept as raw text instead of being rounded
// to double by the JSON reader.
constexpr char kLiteralTag = '\x01';

class LiteralSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using nlohmann::detail::json_sax_dom_parser<json>::json_sax_dom_parser;

  bool number_float(double, const std::string& literal) {
    std::string tagged = kLiteralTag + literal;
    return string(tagged);
  }
};

// Maps JSON paths such as "facets[1].offset" to the line they start on.
class LineScanner {
 public:
  explicit LineScanner(std::string_view text) : text_(text) { value(""); }

  int line_of(const std::string& path) const {
    auto it = lines_.find(path);
    return it == lines_.end() ? 0 : it->second;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }

  std::string read_string() {
    std::string s;
    ++pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\') ++pos_;
      if (pos_ < text_.size()) s += text_[pos_++];
    }
    ++pos_;
    return s;
  }

  void value(const std::string& path) {
    skip_ws();
    if (pos_ >= text_.size()) return;
    lines_.emplace(path, line_);
    const char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      for (;;) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] == '}') break;
        if (text_[pos_] != '"') return;
        const std::string key = read_string();
        skip_ws();
        ++pos_;  // ':'
        value(path.empty() ? key : path + "." + key);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
      }
      ++pos_;
    } else if (c == '[') {
      ++pos_;
      for (std::size_t i = 0;; ++i) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] == ']') break;
        value(path + "[" + std::to_string(i) + "]");
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
      }
      ++pos_;
    } else if (c == '"') {
      read_string();
    } else {
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
             text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '}')
        ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

class FieldError {
 public:
  explicit FieldError(const LineScanner& lines) : lines_(lines) {}

  [[noreturn]] void raise(ErrorCode code, const std::string& path, const std::string& what) const {
    std::string where = path;
    if (int line = lines_.line_of(path); line > 0) where += " (line " + std::to_string(line) + ")";
    throw Error(code, std::string(to_string(code)) + ": " + where + ": " + what);
  }

 private:
  const LineScanner& lines_;
};

BigInt parse_integer(std::string_view s) {
  static const std::regex pattern(R"([+-]?\d+)");
  const std::string str(s);
  if (!std::regex_match(str, pattern)) throw Error(ErrorCode::Parse, "Parse: not an integer: " + str);
  const bool negative = str[0] == '-';
  const std::size_t digits = str.find_first_not_of("+-");
  const std::size_t nonzero = str.find_first_not_of('0', digits);
  const BigInt magnitude(nonzero == std::string::npos ? std::string("0") : str.substr(nonzero));
  return negative ? BigInt(-magnitude) : magnitude;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_integer(std::string_view(s).substr(0, slash));
    const BigInt den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::Parse, "Parse: zero denominator in " + s);
    return Rational(num, den);
  }
  static const std::regex decimal(R"(([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?)");
  std::smatch m;
  if (!std::regex_match(s, m, decimal) || m[2].length() + m[3].length() == 0)
    throw Error(ErrorCode::Parse, "Parse: not a number: " + s);
  const bool plain_integer = !m[3].matched && !m[4].matched;
  std::string digits = m[2].str() + m[3].str();
  if (!plain_integer) {
    const auto first = digits.find_first_not_of('0');
    const auto last = digits.find_last_not_of('0');
    const std::size_t significant = first == std::string::npos ? 0 : last - first + 1;
    if (significant > 12)
      throw Error(ErrorCode::Parse, "Parse: decimal " + s + " has " + std::to_string(significant) +
                                        " significant digits (at most 12); use a fraction string");
  }
  long exponent = m[4].matched ? std::stol(m[4].str()) : 0;
  if (exponent > 1000 || exponent < -1000) throw Error(ErrorCode::Parse, "Parse: exponent out of range in " + s);
  exponent -= static_cast<long>(m[3].length());
  // Leading zeros would make the string read as octal.
  const auto nonzero = digits.find_first_not_of('0');
  BigInt value(nonzero == std::string::npos ? std::string("0") : digits.substr(nonzero));
  if (m[1].str() == "-") value = -value;
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(value, scale) : Rational(value * scale);
}

std::vector<Halfspace> parse_halfspaces(const std::string& text) {
  json doc;
  LiteralSax sax(doc, true);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("Parse: ") + e.what());
  }
  const LineScanner lines(text);
  const FieldError fail(lines);

  if (!doc.is_object()) fail.raise(ErrorCode::Parse, "(root)", "expected an object");
  if (!doc.contains("dim")) fail.raise(ErrorCode::Parse, "dim", "missing");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1)
    fail.raise(ErrorCode::Parse, "dim", "expected a positive integer");
  const auto n = doc["dim"].get<std::size_t>();
  if (!doc.contains("facets") || !doc["facets"].is_array())
    fail.raise(ErrorCode::Parse, "facets", "expected an array");

  std::vector<Halfspace> out;
  const json& facets = doc["facets"];
  for (std::size_t j = 0; j < facets.size(); ++j) {
    const std::string base = "facets[" + std::to_string(j) + "]";
    const json& f = facets[j];
    if (!f.is_object()) fail.raise(ErrorCode::Parse, base, "expected an object");
    if (!f.contains("normal") || !f["normal"].is_array())
      fail.raise(ErrorCode::Parse, base + ".normal", "expected an array of integers");
    if (f["normal"].size() != n)
      fail.raise(ErrorCode::DimensionMismatch, base + ".normal",
                 "length " + std::to_string(f["normal"].size()) + ", expected " + std::to_string(n));
    IntVec normal;
    for (std::size_t i = 0; i < n; ++i) {
      const json& e = f["normal"][i];
      const std::string path = base + ".normal[" + std::to_string(i) + "]";
      if (e.is_number_integer()) {
        normal.emplace_back(e.get<long long>());
      } else if (e.is_string() && !e.get<std::string>().empty() && e.get<std::string>()[0] == kLiteralTag &&
                 e.get<std::string>().find_first_of(".eE") == std::string::npos) {
        normal.push_back(parse_integer(e.get<std::string>().substr(1)));
      } else {
        fail.raise(ErrorCode::Parse, path, "expected an integer");
      }
    }
    if (is_zero(normal)) fail.raise(ErrorCode::ZeroVector, base + ".normal", "the zero vector is not a normal");
    if (content(normal) != 1)
      fail.raise(ErrorCode::NonPrimitiveNormal, base + ".normal", to_string(normal) + " is not primitive");

    if (!f.contains("offset")) fail.raise(ErrorCode::Parse, base + ".offset", "missing");
    const json& o = f["offset"];
    if (!o.is_number_integer() && !o.is_string())
      fail.raise(ErrorCode::Parse, base + ".offset", "expected a number or a \"p/q\" string");
    Rational offset;
    try {
      if (o.is_number_integer()) {
        offset = Rational(BigInt(o.get<long long>()));
      } else {
        std::string s = o.get<std::string>();
        if (!s.empty() && s[0] == kLiteralTag) s.erase(0, 1);
        offset = parse_rational(s);
      }
    } catch (const Error& e) {
      std::string what = e.what();
      if (what.rfind("Parse: ", 0) == 0) what.erase(0, 7);
      fail.raise(ErrorCode::Parse, base + ".offset", what);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].normal.entries() == normal && out[i].offset == offset)
        fail.raise(ErrorCode::DuplicateFacet, base, "repeats facets[" + std::to_string(i) + "]");
    out.push_back({PrimitiveVec::checked(std::move(normal)), offset});
  }
  return out;
}

DelzantPolytope parse_polytope(const std::string& text) { return DelzantPolytope::validate(parse_halfspaces(text)); }

DelzantPolytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "Parse: cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_polytope(buffer.str());
}

std::string polytope_to_json(const DelzantPolytope& polytope) {
  json doc;
  doc["dim"] = polytope.dim();
  doc["facets"] = json::array();
  for (const auto& f : polytope.facets()) {
    json normal = json::array();
    for (const auto& e : f.normal.entries()) normal.push_back(to_long(e));
    std::ostringstream offset;
    offset << f.offset;
    doc["facets"].push_back({{"normal", normal}, {"offset", offset.str()}});
  }
  doc["vertices"] = json::array();
  for (const auto& v : polytope.vertices()) doc["vertices"].push_back(format_point(v.position));
  return doc.dump(2);
}

}  // namespace delzant
