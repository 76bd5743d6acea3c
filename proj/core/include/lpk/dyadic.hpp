#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace lpk {

// [2^-k j, 2^-k (j+1)) with k >= 1. The whole torus is not dyadic.
struct DyadicInterval {
  int level = 1;
  long index = 0;

  static DyadicInterval make(int level, long index);
  static DyadicInterval parse(const std::string& text);  // "k:j"
  std::string text() const;

  double length() const;
  double left() const;
  DyadicInterval parent() const;
  // The ancestor at a coarser level (level <= this->level).
  DyadicInterval ancestor(int level) const;
  DyadicInterval child(int which) const;
  // First grid sample and sample count on a grid of 2^L points.
  std::size_t first_sample(int L) const;
  std::size_t sample_count(int L) const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

enum class Relation { equal, a_inside_b, b_inside_a, disjoint };
Relation relate(const DyadicInterval& a, const DyadicInterval& b);
const char* relation_name(Relation r);

// Half-open arc [left, left + length) mod 1; length 1 is the whole torus.
struct TorusInterval {
  double left = 0.0;
  double length = 1.0;

  static TorusInterval make(double left, double length);
  static TorusInterval whole() { return {0.0, 1.0}; }
  static TorusInterval of(const DyadicInterval& I);

  double center() const;
  bool is_whole() const { return length >= 1.0; }
  bool contains(double x) const;
  bool contains_sample(std::size_t j, std::size_t N) const;
  std::vector<std::size_t> samples(std::size_t N) const;
  // 3I, or T when |I| > 1/3.
  TorusInterval star() const;
};

double dist_torus(double x, double y);
double dist_torus(double x, const TorusInterval& I);
double dist_torus(const TorusInterval& A, const TorusInterval& B);
bool intersects(const TorusInterval& A, const TorusInterval& B);

// I + (n + alpha)|I|, reduced mod 1.
TorusInterval shift_interval(const TorusInterval& I, long n, double alpha);
TorusInterval shift_interval(const DyadicInterval& I, long n, double alpha);
// The ancestor of I with length 2^j |I|, shifted n times its own length.
TorusInterval enlarge_shift(const DyadicInterval& I, int j, long n);
// Same center, length alpha |I| (capped at the whole torus).
TorusInterval concentric_scale(const TorusInterval& I, double alpha);

struct DyadicRectangle {
  DyadicInterval x;
  DyadicInterval y;
  double area() const { return x.length() * y.length(); }
  friend bool operator==(const DyadicRectangle&, const DyadicRectangle&) = default;
};

// Reduce x to [0, 1).
double wrap_unit(double x);

}  // namespace lpk
