#include "lpk/io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpk/errors.hpp"

namespace lpk {

namespace {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little, "binary grid files assume a little-endian host");

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::vector<double> number_array(const json& j, const char* name) {
  const json& a = field(j, name);
  if (!a.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  std::vector<double> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (!v.is_number()) throw ParseError(std::string("field '") + name + "' holds a non-number");
    out.push_back(v.get<double>());
  }
  return out;
}

template <class T>
void put(std::string& s, T v) {
  char b[sizeof(T)];
  std::memcpy(b, &v, sizeof(T));
  s.append(b, sizeof(T));
}

template <class T>
T take(const std::string& s, std::size_t& at, const char* what) {
  if (at + sizeof(T) > s.size()) throw ParseError(std::string("binary grid truncated in ") + what);
  T v;
  std::memcpy(&v, s.data() + at, sizeof(T));
  at += sizeof(T);
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GridFunction checked(std::vector<int> ls, cvec v) {
  std::size_t want = 1;
  for (int L : ls) {
    if (L < kMinLog || L > kMaxLog) throw ParseError("field 'log_sizes' holds an exponent outside [4, 13]");
    want <<= L;
  }
  if (v.size() != want)
    throw ParseError("field 're' has " + std::to_string(v.size()) + " values but 'log_sizes' needs " + std::to_string(want));
  return GridFunction(std::move(ls), std::move(v));
}

}  // namespace

std::string to_json_text(const GridFunction& f) {
  json j;
  j["dims"] = f.dims();
  j["log_sizes"] = f.log_sizes();
  std::vector<double> re, im;
  for (const auto& c : f.values()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  j["re"] = re;
  j["im"] = im;
  return j.dump();
}

GridFunction from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("grid file must hold a JSON object");
  const json& d = field(j, "dims");
  if (!d.is_number_integer()) throw ParseError("field 'dims' must be an integer");
  const auto ls_raw = number_array(j, "log_sizes");
  if (static_cast<std::size_t>(d.get<long>()) != ls_raw.size())
    throw ParseError("field 'dims' disagrees with the length of 'log_sizes'");
  if (ls_raw.empty() || ls_raw.size() > 2) throw ParseError("field 'dims' must be 1 or 2");
  std::vector<int> ls;
  for (double v : ls_raw) {
    if (v != static_cast<int>(v)) throw ParseError("field 'log_sizes' must hold integers");
    ls.push_back(static_cast<int>(v));
  }
  const auto re = number_array(j, "re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) im = number_array(j, "im");
  if (im.size() != re.size()) throw ParseError("field 'im' length differs from 're'");
  cvec v(re.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = {re[i], im[i]};
  return checked(std::move(ls), std::move(v));
}

std::string to_binary(const GridFunction& f) {
  std::string s = "LPKG";
  put<std::uint32_t>(s, static_cast<std::uint32_t>(f.dims()));
  for (int L : f.log_sizes()) put<std::uint32_t>(s, static_cast<std::uint32_t>(L));
  for (const auto& c : f.values()) {
    put<double>(s, c.real());
    put<double>(s, c.imag());
  }
  return s;
}

GridFunction from_binary(const std::string& bytes) {
  if (bytes.compare(0, 4, "LPKG") != 0) throw ParseError("binary grid lacks the 'LPKG' magic");
  std::size_t at = 4;
  const auto dims = take<std::uint32_t>(bytes, at, "dims");
  if (dims < 1 || dims > 2) throw ParseError("binary field 'dims' must be 1 or 2");
  std::vector<int> ls;
  for (std::uint32_t a = 0; a < dims; ++a) ls.push_back(static_cast<int>(take<std::uint32_t>(bytes, at, "log_sizes")));
  const std::size_t rest = bytes.size() - at;
  if (rest % 16 != 0) throw ParseError("binary field 'values' is not a whole number of (re, im) pairs");
  cvec v(rest / 16);
  for (auto& c : v) {
    const double re = take<double>(bytes, at, "values");
    c = {re, take<double>(bytes, at, "values")};
  }
  return checked(std::move(ls), std::move(v));
}

FileFormat format_of(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0 ? FileFormat::json : FileFormat::binary;
}

GridFunction read_grid_function(const std::string& path) {
  const std::string data = slurp(path);
  return format_of(path) == FileFormat::json ? from_json_text(data) : from_binary(data);
}

void write_grid_function(const GridFunction& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << (format_of(path) == FileFormat::json ? to_json_text(f) : to_binary(f));
}

}  // namespace lpk
