#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "seqfam/errors.hpp"
#include "seqfam/family.hpp"

namespace seqfam {

namespace {

constexpr std::string_view kMagic = "#PRSFAM";
constexpr std::string_view kVersion = "v1";

bool valid_tag(std::string_view tag) {
  if (tag == "f1" || tag == "f2" || tag == "ksym" || tag == "external") return true;
  if (tag.size() > 6 && tag.starts_with("dual(") && tag.back() == ')') return valid_tag(tag.substr(5, tag.size() - 6));
  return false;
}

std::uint64_t parse_uint(std::string_view text, std::size_t line, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError(line, "invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view expect_field(std::istringstream& header, std::string_view key, std::string& storage) {
  if (!(header >> storage)) throw ParseError(1, "missing header field " + std::string(key));
  const std::string prefix = std::string(key) + "=";
  if (!std::string_view(storage).starts_with(prefix)) {
    throw ParseError(1, "expected header field " + std::string(key) + "=..., got '" + storage + "'");
  }
  return std::string_view(storage).substr(prefix.size());
}

}  // namespace

void write_family(const Family& fam, std::ostream& out) {
  out << kMagic << ' ' << kVersion << " p=" << fam.prime() << " d=" << fam.degree() << " k=" << fam.alphabet()
      << " N=" << fam.length() << " F=" << fam.size() << " construction=" << fam.construction() << '\n';
  std::string line;
  for (std::size_t r = 0; r < fam.size(); ++r) {
    line.clear();
    for (std::size_t n = 0; n < fam.length(); ++n) {
      if (n != 0) line += ' ';
      line += std::to_string(fam.at(r, n));
    }
    line += '\n';
    out << line;
  }
}

Family read_family(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty family file");
  if (line.find('\r') != std::string::npos) throw ParseError(1, "CR characters are not allowed (LF line endings)");

  std::istringstream header(line);
  std::string token;
  if (!(header >> token) || token != kMagic) throw ParseError(1, "missing #PRSFAM magic");
  if (!(header >> token) || token != kVersion) throw ParseError(1, "unsupported version '" + token + "'");
  std::string storage;
  Family::Context context;
  context.p = parse_uint(expect_field(header, "p", storage), 1, "p");
  context.d = static_cast<unsigned>(parse_uint(expect_field(header, "d", storage), 1, "d"));
  context.k = static_cast<unsigned>(parse_uint(expect_field(header, "k", storage), 1, "k"));
  const std::size_t length = parse_uint(expect_field(header, "N", storage), 1, "N");
  const std::size_t rows = parse_uint(expect_field(header, "F", storage), 1, "F");
  context.construction = std::string(expect_field(header, "construction", storage));
  if (header >> token) throw ParseError(1, "trailing header content '" + token + "'");
  if (!valid_tag(context.construction)) throw ParseError(1, "unknown construction tag '" + context.construction + "'");
  if (context.k == 0 || context.k > kMaxAlphabet) throw ParseError(1, "alphabet size k out of range");
  if (length == 0 || rows == 0) throw ParseError(1, "F and N must be positive");

  std::vector<Symbol> symbols;
  symbols.reserve(rows * length);
  std::size_t line_no = 1;
  std::size_t row_count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find('\r') != std::string::npos) throw ParseError(line_no, "CR characters are not allowed");
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    if (row_count == rows) throw ParseError(line_no, "more rows than header F = " + std::to_string(rows));
    std::istringstream row(line);
    std::size_t count = 0;
    while (row >> token) {
      const auto value = parse_uint(token, line_no, "symbol");
      if (value >= context.k) {
        throw ParseError(line_no, "symbol " + token + " outside alphabet of size " + std::to_string(context.k));
      }
      symbols.push_back(static_cast<Symbol>(value));
      ++count;
    }
    if (count != length) {
      throw ParseError(line_no, "row has " + std::to_string(count) + " symbols, header N = " + std::to_string(length));
    }
    ++row_count;
  }
  if (row_count != rows) {
    throw ParseError(line_no, "file has " + std::to_string(row_count) + " rows, header F = " + std::to_string(rows));
  }
  return Family(std::move(context), rows, length, std::move(symbols));
}

void write_family_file(const Family& fam, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_family(fam, out);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Family read_family_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_family(in);
}

}  // namespace seqfam
