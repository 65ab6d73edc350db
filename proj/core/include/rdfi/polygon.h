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

#ifndef RDFI_POLYGON_H_
#define RDFI_POLYGON_H_

#include <compare>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rdfi/rational.h"

namespace rdfi {

struct Point {
  Rational x;
  Rational y;
};

bool operator==(const Point& a, const Point& b);
std::strong_ordering operator<=>(const Point& a, const Point& b);

// a*x + b*y <= c.
struct HalfSpace {
  Rational a;
  Rational b;
  Rational c;

  bool Contains(const Point& p) const { return a * p.x + b * p.y <= c; }
  bool ContainsStrictly(const Point& p) const {
    return a * p.x + b * p.y < c;
  }
};

// A bounded, full-dimensional convex polygon with exact coordinates.
//
// The representation is canonical: vertices run counter-clockwise from the
// lexicographically smallest one with no collinear vertices, and there is one
// normalized half-space per edge. Two polygons denote the same point set iff
// they compare equal. Copies share the underlying data.
class Polygon {
 public:
  // Throws Error(kDegeneratePolygon) if the intersection is empty, unbounded,
  // or has zero area.
  static Polygon FromHalfSpaces(std::span<const HalfSpace> half_spaces);

  // [x1, x2] x [y1, y2]; requires x1 < x2 and y1 < y2.
  static Polygon Box(const Rational& x1, const Rational& y1,
                     const Rational& x2, const Rational& y2);

  // Parses a conjunction of linear comparisons over x and y, such as
  // "x >= 0 && x <= 10 && 2*x + y <= 15". Throws Error(kDegeneratePolygon) on
  // degenerate input and std::invalid_argument on malformed text.
  static Polygon Parse(std::string_view text);

  const std::vector<Point>& vertices() const { return data_->vertices; }
  const std::vector<HalfSpace>& half_spaces() const {
    return data_->half_spaces;
  }

  bool is_box() const { return data_->is_box; }
  const Rational& min_x() const { return data_->min_x; }
  const Rational& min_y() const { return data_->min_y; }
  const Rational& max_x() const { return data_->max_x; }
  const Rational& max_y() const { return data_->max_y; }

  bool Contains(const Point& p) const;
  bool ContainsInInterior(const Point& p) const;

  // Canonical text accepted by Parse. Boxes print as
  // "x >= a && x <= b && y >= c && y <= d".
  std::string ToString() const;

  friend bool operator==(const Polygon& a, const Polygon& b);
  friend std::strong_ordering operator<=>(const Polygon& a, const Polygon& b);

 private:
  struct Data {
    std::vector<Point> vertices;
    std::vector<HalfSpace> half_spaces;
    bool is_box = false;
    Rational min_x, min_y, max_x, max_y;
  };

  static Polygon FromVertices(std::vector<Point> hull);

  std::shared_ptr<const Data> data_;
};

// Vertices of the feasible region of the half-spaces, as a convex hull in
// counter-clockwise order without collinear points. Empty when infeasible. The
// region must be bounded for the result to describe it.
std::vector<Point> FeasibleHull(std::span<const HalfSpace> half_spaces);

// Twice the signed area of the hull.
Rational DoubleArea(std::span<const Point> hull);

}  // namespace rdfi

#endif  // RDFI_POLYGON_H_
