#include "lpk/dyadic.hpp"

#include <algorithm>
#include <cmath>

#include "lpk/errors.hpp"

namespace lpk {

double wrap_unit(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

DyadicInterval DyadicInterval::make(int level, long index) {
  if (level < 1 || level > 62) throw LevelError("dyadic level " + std::to_string(level) + " out of range");
  if (index < 0 || index >= (1L << level))
    throw LevelError("dyadic index " + std::to_string(index) + " outside [0, 2^" + std::to_string(level) + ")");
  return {level, index};
}

DyadicInterval DyadicInterval::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("dyadic interval '" + text + "' is not of the form k:j");
  try {
    std::size_t p1 = 0, p2 = 0;
    int k = std::stoi(text.substr(0, colon), &p1);
    long j = std::stol(text.substr(colon + 1), &p2);
    if (p1 != colon || p2 != text.size() - colon - 1) throw ParseError("trailing characters in '" + text + "'");
    return make(k, j);
  } catch (const std::logic_error&) {
    throw ParseError("dyadic interval '" + text + "' is not of the form k:j");
  }
}

std::string DyadicInterval::text() const { return std::to_string(level) + ":" + std::to_string(index); }

double DyadicInterval::length() const { return std::ldexp(1.0, -level); }
double DyadicInterval::left() const { return std::ldexp(static_cast<double>(index), -level); }

DyadicInterval DyadicInterval::parent() const {
  if (level == 1) throw LevelError("level-1 intervals have no dyadic parent");
  return {level - 1, index >> 1};
}

DyadicInterval DyadicInterval::ancestor(int k) const {
  if (k < 1 || k > level) throw LevelError("ancestor level out of range");
  return {k, index >> (level - k)};
}

DyadicInterval DyadicInterval::child(int which) const { return {level + 1, 2 * index + (which ? 1 : 0)}; }

std::size_t DyadicInterval::first_sample(int L) const {
  if (level > L) throw LevelError("interval finer than the grid");
  return static_cast<std::size_t>(index) << (L - level);
}

std::size_t DyadicInterval::sample_count(int L) const {
  if (level > L) throw LevelError("interval finer than the grid");
  return std::size_t{1} << (L - level);
}

Relation relate(const DyadicInterval& a, const DyadicInterval& b) {
  if (a.level == b.level) return a.index == b.index ? Relation::equal : Relation::disjoint;
  if (a.level > b.level) return (a.index >> (a.level - b.level)) == b.index ? Relation::a_inside_b : Relation::disjoint;
  return (b.index >> (b.level - a.level)) == a.index ? Relation::b_inside_a : Relation::disjoint;
}

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::a_inside_b: return "a_inside_b";
    case Relation::b_inside_a: return "b_inside_a";
    case Relation::disjoint: return "disjoint";
  }
  return "?";
}

TorusInterval TorusInterval::make(double left, double length) {
  if (!(length > 0.0) || length > 1.0) throw DomainError("torus interval length must lie in (0, 1]");
  return {wrap_unit(left), length};
}

TorusInterval TorusInterval::of(const DyadicInterval& I) { return {I.left(), I.length()}; }

double TorusInterval::center() const { return wrap_unit(left + length / 2); }

bool TorusInterval::contains(double x) const {
  if (is_whole()) return true;
  return wrap_unit(x - left) < length;
}

bool TorusInterval::contains_sample(std::size_t j, std::size_t N) const {
  return contains(static_cast<double>(j) / static_cast<double>(N));
}

std::vector<std::size_t> TorusInterval::samples(std::size_t N) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < N; ++j)
    if (contains_sample(j, N)) out.push_back(j);
  return out;
}

TorusInterval TorusInterval::star() const {
  if (length > 1.0 / 3.0) return whole();
  return concentric_scale(*this, 3.0);
}

double dist_torus(double x, double y) {
  double d = std::fabs(wrap_unit(x) - wrap_unit(y));
  return std::min(d, 1.0 - d);
}

double dist_torus(double x, const TorusInterval& I) {
  if (I.contains(x)) return 0.0;
  return std::min(dist_torus(x, I.left), dist_torus(x, I.left + I.length));
}

bool intersects(const TorusInterval& A, const TorusInterval& B) {
  return A.contains(B.left) || B.contains(A.left);
}

double dist_torus(const TorusInterval& A, const TorusInterval& B) {
  if (intersects(A, B)) return 0.0;
  return std::min({dist_torus(A.left, B), dist_torus(A.left + A.length, B), dist_torus(B.left, A),
                   dist_torus(B.left + B.length, A)});
}

TorusInterval shift_interval(const TorusInterval& I, long n, double alpha) {
  if (I.is_whole()) return I;
  return {wrap_unit(I.left + (static_cast<double>(n) + alpha) * I.length), I.length};
}

TorusInterval shift_interval(const DyadicInterval& I, long n, double alpha) {
  return shift_interval(TorusInterval::of(I), n, alpha);
}

TorusInterval enlarge_shift(const DyadicInterval& I, int j, long n) {
  if (j < 1 || j > I.level - 1)
    throw LevelError("enlargement 2^" + std::to_string(j) + " exceeds the dyadic tree above " + I.text());
  return shift_interval(I.ancestor(I.level - j), n, 0.0);
}

TorusInterval concentric_scale(const TorusInterval& I, double alpha) {
  if (!(alpha > 0.0) || alpha * I.length > 1.0 + 1e-12)
    throw DomainError("concentric scale factor out of range");
  double len = alpha * I.length;
  if (len >= 1.0) return TorusInterval::whole();
  return {wrap_unit(I.center() - len / 2), len};
}

}  // namespace lpk
