#include "torsioncover/textio.hpp"

#include <fstream>
#include <sstream>

namespace tc {

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

std::vector<std::string> tokenize_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open fixture: " + path);
  return tokenize(in);
}

namespace {

const std::string& need(const std::vector<std::string>& t, size_t i, const char* what) {
  if (i >= t.size()) throw DataError(std::string("unexpected end of data, wanted ") + what);
  return t[i];
}

long to_long(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError(std::string("bad ") + what + ": " + s);
  }
}

Rational to_rational(const std::string& s, const char* what) {
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    throw DataError(std::string("bad ") + what + ": " + s);
  }
}

Integer to_integer(const std::string& s, const char* what) {
  try {
    return parse_integer(s);
  } catch (const std::exception&) {
    throw DataError(std::string("bad ") + what + ": " + s);
  }
}

}  // namespace

Poly<Rational> parse_unipoly(const std::vector<std::string>& tokens, size_t* pos) {
  size_t i = pos ? *pos : 0;
  if (need(tokens, i, "unipoly header") != "unipoly") throw DataError("expected 'unipoly'");
  long deg = to_long(need(tokens, i + 1, "degree"), "degree");
  if (deg < -1) throw DataError("bad unipoly degree");
  i += 2;
  std::vector<Rational> coeffs;
  for (long k = 0; k <= deg; ++k)
    coeffs.push_back(to_rational(need(tokens, i++, "coefficient"), "coefficient"));
  Poly<Rational> f{std::move(coeffs)};
  if (f.degree() != deg) throw DataError("unipoly degree does not match leading coefficient");
  if (pos) *pos = i;
  return f;
}

BiPoly parse_bipoly(const std::vector<std::string>& tokens, size_t* pos) {
  size_t i = pos ? *pos : 0;
  if (need(tokens, i, "bipoly header") != "bipoly") throw DataError("expected 'bipoly'");
  ++i;
  if ((tokens.size() - i) % 3 != 0) throw DataError("bipoly: term token count not divisible by 3");
  BiPoly f;
  while (i + 3 <= tokens.size()) {
    long ex = to_long(tokens[i], "x exponent");
    long ey = to_long(tokens[i + 1], "y exponent");
    Rational c = to_rational(tokens[i + 2], "coefficient");
    if (ex < 0 || ey < 0) throw DataError("negative exponent in bipoly");
    f.add(ex, ey, c);
    i += 3;
  }
  if (pos) *pos = i;
  return f;
}

Poly<Rational> load_unipoly(const std::string& path) {
  auto t = tokenize_file(path);
  size_t pos = 0;
  auto f = parse_unipoly(t, &pos);
  if (pos != t.size()) throw DataError("trailing tokens in " + path);
  return f;
}

BiPoly load_bipoly(const std::string& path) {
  auto t = tokenize_file(path);
  size_t pos = 0;
  auto f = parse_bipoly(t, &pos);
  if (pos != t.size()) throw DataError("trailing tokens in " + path);
  return f;
}

std::string serialize_unipoly(const Poly<Rational>& f) {
  std::ostringstream out;
  out << "unipoly " << f.degree() << "\n";
  for (long i = 0; i <= f.degree(); ++i) out << to_string(f.coeff(i)) << "\n";
  return out.str();
}

std::string serialize_bipoly(const BiPoly& f) {
  std::ostringstream out;
  out << "bipoly\n";
  // highest x power first, matching how the model is usually displayed
  std::vector<std::pair<BiPoly::Key, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  for (const auto& [k, c] : terms)
    out << k.first << " " << k.second << " " << to_string(c) << "\n";
  return out.str();
}

std::vector<ApRow> load_ap_table(const std::string& path) {
  auto t = tokenize_file(path);
  if (t.size() % 3 != 0) throw DataError("ap table: token count not divisible by 3");
  std::vector<ApRow> rows;
  for (size_t i = 0; i < t.size(); i += 3)
    rows.push_back({to_integer(t[i], "p"), to_integer(t[i + 1], "re"), to_integer(t[i + 2], "im")});
  return rows;
}

std::string serialize_ap_table(const std::vector<ApRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows)
    out << to_string(r.p) << " " << to_string(r.re) << " " << to_string(r.im) << "\n";
  return out.str();
}

std::vector<RepMatrix> load_reps(const std::string& path) {
  auto t = tokenize_file(path);
  if (t.size() % 19 != 0) throw DataError("reps: token count not divisible by 19");
  std::vector<RepMatrix> reps;
  for (size_t i = 0; i < t.size(); i += 19) {
    RepMatrix r;
    r.name = t[i];
    for (size_t j = 0; j < 18; ++j)
      r.entries[j] = static_cast<int>(to_long(t[i + 1 + j], "matrix entry"));
    reps.push_back(std::move(r));
  }
  return reps;
}

std::string serialize_reps(const std::vector<RepMatrix>& reps) {
  std::ostringstream out;
  for (const auto& r : reps) {
    out << r.name;
    for (int e : r.entries) out << " " << e;
    out << "\n";
  }
  return out.str();
}

std::vector<FrobRow> load_frob_table(const std::string& path) {
  auto t = tokenize_file(path);
  std::vector<FrobRow> rows;
  size_t i = 0;
  while (i < t.size()) {
    FrobRow r;
    r.p = to_integer(need(t, i++, "p"), "p");
    const std::string& sign = need(t, i++, "sign");
    if (sign == "+" || sign == "+1")
      r.sign = 1;
    else if (sign == "-" || sign == "-1")
      r.sign = -1;
    else
      throw DataError("bad sign: " + sign);
    const std::string& what = need(t, i++, "rep name");
    if (what == "ambiguous")
      r.ambiguous_count = static_cast<int>(to_long(need(t, i++, "count"), "count"));
    else
      r.rep_name = what;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string serialize_frob_table(const std::vector<FrobRow>& rows) {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << to_string(r.p) << " " << (r.sign > 0 ? "+" : "-") << " ";
    if (r.rep_name.empty())
      out << "ambiguous " << r.ambiguous_count;
    else
      out << r.rep_name;
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  out << content;
}

}  // namespace tc
