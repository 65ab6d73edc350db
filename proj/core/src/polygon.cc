// Copyright 2026 The RDFi Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdfi/polygon.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "rdfi/errors.h"

namespace rdfi {
namespace {

Rational Cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Scales to integer coefficients with gcd 1. The direction is unchanged.
HalfSpace Normalize(const HalfSpace& h) {
  mpz_class l = 1;
  for (const Rational* r : {&h.a, &h.b, &h.c}) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->get_den_mpz_t());
  }
  const mpz_class a = Rational(h.a * l).get_num();
  const mpz_class b = Rational(h.b * l).get_num();
  const mpz_class c = Rational(h.c * l).get_num();
  mpz_class g = 0;
  for (const mpz_class* z : {&a, &b, &c}) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z->get_mpz_t());
  }
  if (g == 0) g = 1;
  return HalfSpace{Rational(a / g), Rational(b / g), Rational(c / g)};
}

std::string Coefficient(const Rational& k, const char* var, bool leading) {
  std::string out;
  Rational mag = abs(k);
  if (leading) {
    if (k < 0) out += "-";
  } else {
    out += k < 0 ? " - " : " + ";
  }
  if (mag != 1) out += FormatRational(mag) + "*";
  out += var;
  return out;
}

std::string HalfSpaceText(const HalfSpace& h) {
  if (h.b == 0) {
    return h.a > 0 ? "x <= " + FormatRational(h.c / h.a)
                   : "x >= " + FormatRational(h.c / h.a);
  }
  if (h.a == 0) {
    return h.b > 0 ? "y <= " + FormatRational(h.c / h.b)
                   : "y >= " + FormatRational(h.c / h.b);
  }
  return Coefficient(h.a, "x", true) + Coefficient(h.b, "y", false) +
         " <= " + FormatRational(h.c);
}

// Recursive-descent reader for the polygon text syntax.
class PolygonTextReader {
 public:
  explicit PolygonTextReader(std::string_view text) : text_(text) {}

  std::vector<HalfSpace> Read() {
    std::vector<HalfSpace> out;
    while (true) {
      ReadComparison(out);
      SkipSpace();
      if (pos_ == text_.size()) break;
      if (Consume("&&") || Consume("\xE2\x88\xA7")) continue;
      Fail("expected '&&'");
    }
    return out;
  }

 private:
  struct Affine {
    Rational x, y, k;
  };

  void ReadComparison(std::vector<HalfSpace>& out) {
    const Affine lhs = ReadAffine();
    SkipSpace();
    bool less;
    if (Consume("<=") || Consume("\xE2\x89\xA4")) {
      less = true;
    } else if (Consume(">=") || Consume("\xE2\x89\xA5")) {
      less = false;
    } else {
      Fail("expected '<=' or '>='");
    }
    const Affine rhs = ReadAffine();
    // lhs - rhs (<= | >=) 0
    Rational a = lhs.x - rhs.x, b = lhs.y - rhs.y, k = lhs.k - rhs.k;
    if (less) {
      out.push_back(HalfSpace{a, b, -k});
    } else {
      out.push_back(HalfSpace{-a, -b, k});
    }
  }

  Affine ReadAffine() {
    Affine acc;
    bool first = true;
    while (true) {
      SkipSpace();
      bool negative = false;
      if (Consume("+")) {
        if (first) Fail("unexpected '+'");
      } else if (Consume("-")) {
        negative = true;
      } else if (!first) {
        break;
      }
      first = false;
      SkipSpace();
      Rational coef = 1;
      bool have_number = false;
      if (pos_ < text_.size() && std::isdigit(Peek())) {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(Peek()) || Peek() == '.' || Peek() == '/')) {
          ++pos_;
        }
        auto r = ParseRational(text_.substr(start, pos_ - start));
        if (!r) Fail("malformed number");
        coef = *r;
        have_number = true;
        SkipSpace();
        Consume("*");
        SkipSpace();
      }
      if (negative) coef = -coef;
      if (pos_ < text_.size() && (Peek() == 'x' || Peek() == 'y')) {
        (Peek() == 'x' ? acc.x : acc.y) += coef;
        ++pos_;
      } else if (have_number) {
        acc.k += coef;
      } else {
        Fail("expected a number, x or y");
      }
    }
    return acc;
  }

  unsigned char Peek() const { return static_cast<unsigned char>(text_[pos_]); }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(Peek())) ++pos_;
  }

  bool Consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("polygon text at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

bool operator==(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

std::strong_ordering operator<=>(const Point& a, const Point& b) {
  if (auto c = CompareRational(a.x, b.x); c != 0) return c;
  return CompareRational(a.y, b.y);
}

std::vector<Point> FeasibleHull(std::span<const HalfSpace> half_spaces) {
  std::vector<Point> points;
  const size_t n = half_spaces.size();
  for (size_t i = 0; i < n; ++i) {
    const HalfSpace& p = half_spaces[i];
    for (size_t j = i + 1; j < n; ++j) {
      const HalfSpace& q = half_spaces[j];
      const Rational det = p.a * q.b - q.a * p.b;
      if (det == 0) continue;
      Point v{(p.c * q.b - q.c * p.b) / det, (p.a * q.c - q.a * p.c) / det};
      bool feasible = true;
      for (const HalfSpace& h : half_spaces) {
        if (!h.Contains(v)) {
          feasible = false;
          break;
        }
      }
      if (feasible) points.push_back(std::move(v));
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  // Monotone chain; collinear points are dropped.
  std::vector<Point> hull(2 * points.size());
  size_t k = 0;
  for (size_t i = 0; i < points.size(); ++i) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  for (size_t i = points.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && Cross(hull[k - 2], hull[k - 1], points[i - 1]) <= 0) --k;
    hull[k++] = points[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

Rational DoubleArea(std::span<const Point> hull) {
  Rational area = 0;
  for (size_t i = 0; i < hull.size(); ++i) {
    const Point& p = hull[i];
    const Point& q = hull[(i + 1) % hull.size()];
    area += p.x * q.y - q.x * p.y;
  }
  return area;
}

Polygon Polygon::FromHalfSpaces(std::span<const HalfSpace> half_spaces) {
  std::vector<HalfSpace> proper;
  for (const HalfSpace& h : half_spaces) {
    if (h.a == 0 && h.b == 0) {
      if (h.c < 0) throw Error(ErrorCode::kDegeneratePolygon, "empty region");
      continue;
    }
    proper.push_back(h);
  }
  // Bounded iff no boundary direction is a recession direction.
  for (const HalfSpace& h : proper) {
    for (int sign : {1, -1}) {
      const Rational dx = -h.b * sign, dy = h.a * sign;
      bool recedes = true;
      for (const HalfSpace& g : proper) {
        if (g.a * dx + g.b * dy > 0) {
          recedes = false;
          break;
        }
      }
      if (recedes) {
        throw Error(ErrorCode::kDegeneratePolygon, "unbounded region");
      }
    }
  }
  if (proper.empty()) {
    throw Error(ErrorCode::kDegeneratePolygon, "unbounded region");
  }
  std::vector<Point> hull = FeasibleHull(proper);
  if (hull.size() < 3) {
    throw Error(ErrorCode::kDegeneratePolygon,
                hull.empty() ? "empty region" : "region has zero area");
  }
  return FromVertices(std::move(hull));
}

Polygon Polygon::FromVertices(std::vector<Point> hull) {
  auto data = std::make_shared<Data>();
  data->vertices = std::move(hull);
  const auto& v = data->vertices;
  data->min_x = data->max_x = v[0].x;
  data->min_y = data->max_y = v[0].y;
  bool axis_aligned = v.size() == 4;
  for (size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    const Rational dx = q.x - p.x, dy = q.y - p.y;
    data->half_spaces.push_back(
        Normalize(HalfSpace{dy, -dx, dy * p.x - dx * p.y}));
    if (dx != 0 && dy != 0) axis_aligned = false;
    if (p.x < data->min_x) data->min_x = p.x;
    if (p.x > data->max_x) data->max_x = p.x;
    if (p.y < data->min_y) data->min_y = p.y;
    if (p.y > data->max_y) data->max_y = p.y;
  }
  data->is_box = axis_aligned;
  Polygon out;
  out.data_ = std::move(data);
  return out;
}

Polygon Polygon::Box(const Rational& x1, const Rational& y1,
                     const Rational& x2, const Rational& y2) {
  if (!(x1 < x2) || !(y1 < y2)) {
    throw Error(ErrorCode::kDegeneratePolygon, "box has zero area");
  }
  return FromVertices({Point{x1, y1}, Point{x2, y1}, Point{x2, y2},
                       Point{x1, y2}});
}

Polygon Polygon::Parse(std::string_view text) {
  std::vector<HalfSpace> hs = PolygonTextReader(text).Read();
  return FromHalfSpaces(hs);
}

bool Polygon::Contains(const Point& p) const {
  for (const HalfSpace& h : half_spaces()) {
    if (!h.Contains(p)) return false;
  }
  return true;
}

bool Polygon::ContainsInInterior(const Point& p) const {
  for (const HalfSpace& h : half_spaces()) {
    if (!h.ContainsStrictly(p)) return false;
  }
  return true;
}

std::string Polygon::ToString() const {
  if (is_box()) {
    return "x >= " + FormatRational(min_x()) + " && x <= " +
           FormatRational(max_x()) + " && y >= " + FormatRational(min_y()) +
           " && y <= " + FormatRational(max_y());
  }
  std::string out;
  for (const HalfSpace& h : half_spaces()) {
    if (!out.empty()) out += " && ";
    out += HalfSpaceText(h);
  }
  return out;
}

bool operator==(const Polygon& a, const Polygon& b) {
  if (a.data_ == b.data_) return true;
  return a.vertices() == b.vertices();
}

std::strong_ordering operator<=>(const Polygon& a, const Polygon& b) {
  if (a.data_ == b.data_) return std::strong_ordering::equal;
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  return std::lexicographical_compare_three_way(va.begin(), va.end(),
                                                vb.begin(), vb.end());
}

}  // namespace rdfi
