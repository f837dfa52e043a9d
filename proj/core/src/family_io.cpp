#include "linearr/family_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "linearr/errors.hpp"

namespace linearr {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool looks_vertical(const std::string& token) {
  std::string t = lower(token);
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.erase(0, 1);
  return t == "inf" || t == "infinity" || t == "vertical" || t == "nan";
}

Rat parse_rat(const std::string& token, std::size_t line_no, bool slope) {
  if (slope && looks_vertical(token)) throw VerticalLineError(line_no, token);
  try {
    return Rat::parse(token);
  } catch (const std::domain_error&) {
    if (slope) throw VerticalLineError(line_no, token);
    throw ParseError(line_no, "zero denominator in intercept '" + token + "'");
  } catch (const std::invalid_argument&) {
    throw ParseError(line_no, "not a rational literal: '" + token + "'");
  }
}

std::int64_t header_int(const FamilyFile& f, const std::string& key, std::int64_t fallback) {
  const auto v = f.get(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long long x = std::stoll(*v, &used);
    if (used != v->size()) throw ParameterError("bad integer");
    return x;
  } catch (const std::exception&) {
    throw ParameterError("header " + key + " is not an integer: '" + *v + "'");
  }
}

}  // namespace

std::optional<std::string> FamilyFile::get(const std::string& key) const {
  for (const auto& [k, v] : header) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<ConstructionSpec> FamilyFile::spec() const {
  const auto kind = get("kind");
  if (!kind) return std::nullopt;
  ConstructionSpec s;
  s.kind = parse_construction_kind(*kind);
  s.p = header_int(*this, "p", s.p);
  s.q = header_int(*this, "q", s.q);
  s.l = header_int(*this, "l", s.l);
  s.k = header_int(*this, "k", s.k);
  s.n = header_int(*this, "n", s.n);
  return s;
}

FamilyFile parse_family_file(const std::string& text) {
  FamilyFile out;
  std::vector<Line> lines;
  std::map<Rat, std::size_t> seen;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string t = trim(raw);
    if (t.rfind("#!", 0) == 0) {
      const std::string body = trim(t.substr(2));
      const auto eq = body.find('=');
      if (eq == std::string::npos || eq == 0) throw ParseError(line_no, "header must be key=value");
      out.header.emplace_back(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
      continue;
    }
    const std::string data = trim(t.substr(0, t.find('#')));
    if (data.empty()) continue;
    std::istringstream fields(data);
    std::vector<std::string> tok;
    for (std::string s; fields >> s;) tok.push_back(s);
    if (tok.size() != 2) {
      if (!tok.empty() && looks_vertical(tok[0])) throw VerticalLineError(line_no, tok[0]);
      throw ParseError(line_no, "expected two fields 'm c', got " + std::to_string(tok.size()));
    }
    Line l{parse_rat(tok[0], line_no, true), parse_rat(tok[1], line_no, false)};
    if (const auto it = seen.find(l.m); it != seen.end()) throw DuplicateSlopeError(l.m.to_string());
    seen.emplace(l.m, line_no);
    lines.push_back(std::move(l));
  }
  out.family = LineFamily(std::move(lines), out.get("name"));
  return out;
}

LineFamily parse_family(const std::string& text) { return parse_family_file(text).family; }

std::string serialize_family(const LineFamily& family,
                             const std::vector<std::pair<std::string, std::string>>& header) {
  std::ostringstream os;
  bool named = false;
  for (const auto& [k, v] : header) named = named || k == "name";
  if (!named && family.name()) os << "#! name=" << *family.name() << "\n";
  for (const auto& [k, v] : header) os << "#! " << k << "=" << v << "\n";
  for (const Line& l : family) os << l.m.to_string() << " " << l.c.to_string() << "\n";
  return os.str();
}

std::vector<std::pair<std::string, std::string>> provenance_header(const ConstructionSpec& spec) {
  return spec.to_pairs();
}

}  // namespace linearr
