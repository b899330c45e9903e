#pragma once

#include "torsioncover/bipoly.hpp"
#include "torsioncover/poly.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tc {

// Fixture / data-file problems map to CLI exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Tokens of a data stream with '#' comments stripped.
std::vector<std::string> tokenize(std::istream& in);
std::vector<std::string> tokenize_file(const std::string& path);

// Polynomial text format. First token line "unipoly <degree>" or "bipoly",
// then one term per line: a coefficient (num or num/den, constant term
// first) for unipoly, or "e_x e_y num[/den]" for bipoly.
Poly<Rational> parse_unipoly(const std::vector<std::string>& tokens, size_t* pos = nullptr);
BiPoly parse_bipoly(const std::vector<std::string>& tokens, size_t* pos = nullptr);
Poly<Rational> load_unipoly(const std::string& path);
BiPoly load_bipoly(const std::string& path);
std::string serialize_unipoly(const Poly<Rational>& f);
std::string serialize_bipoly(const BiPoly& f);

// rows: p re im  (a_p = re + im*i; for the huge-prime table the values are
// the printed residues mod 3)
struct ApRow {
  Integer p;
  Integer re, im;
};
std::vector<ApRow> load_ap_table(const std::string& path);
std::string serialize_ap_table(const std::vector<ApRow>& rows);

// class representatives: name followed by 18 small integers
// (re im per entry, row-major)
struct RepMatrix {
  std::string name;
  std::array<int, 18> entries;
};
std::vector<RepMatrix> load_reps(const std::string& path);
std::string serialize_reps(const std::vector<RepMatrix>& reps);

// rows: p sign (rep-name | ambiguous <count>)
struct FrobRow {
  Integer p;
  int sign = 0;
  std::string rep_name;     // empty when ambiguous
  int ambiguous_count = 0;  // 0 when a representative is printed
};
std::vector<FrobRow> load_frob_table(const std::string& path);
std::string serialize_frob_table(const std::vector<FrobRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tc
