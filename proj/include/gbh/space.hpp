// Finite approximation spaces: length-d sequences over a b-letter alphabet
// with stem-generated basic sets, a literal point-enumeration oracle for set
// algebra, an indicator-vector embedding into a 0/1 sequence space, and the
// level-1/level-2 universal-set constructions.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gbh/error.hpp"

namespace gbh::space {

inline constexpr std::size_t kDefaultPointCap = 4096;
inline constexpr std::size_t kDefaultParamCap = 1u << 16;

char letter_char(int v);
int letter_value(char c);

// A finite stand-in for the generalized Cantor/Baire space: the chosen
// points are length-d strings over the digits 0..b-1.  The point list may
// be any subset of the full b^d grid.
class FiniteSpace {
 public:
  static std::shared_ptr<const FiniteSpace> make(int b, int d, std::vector<std::string> points,
                                                 std::size_t cap = kDefaultPointCap);
  // the full grid
  static std::shared_ptr<const FiniteSpace> full(int b, int d,
                                                 std::size_t cap = kDefaultPointCap);

  int branching() const { return b_; }
  int depth() const { return d_; }
  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  int index_of(const std::string& point) const;  // -1 if absent

  bool operator==(const FiniteSpace& o) const {
    return b_ == o.b_ && d_ == o.d_ && points_ == o.points_;
  }

 private:
  FiniteSpace(int b, int d, std::vector<std::string> points);
  int b_, d_;
  std::vector<std::string> points_;  // sorted, unique
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

// A stem: a prefix of length <= d over the space's alphabet.
void validate_stem(const FiniteSpace& space, const std::string& stem);

// A subset of a space's points.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(SpacePtr space, bool all = false);
  PointSet(SpacePtr space, const std::vector<std::string>& points);

  const SpacePtr& space() const { return space_; }
  bool contains(int idx) const { return bits_[static_cast<std::size_t>(idx)]; }
  bool contains(const std::string& point) const;
  void add(int idx) { bits_[static_cast<std::size_t>(idx)] = true; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<std::string> to_points() const;

  bool operator==(const PointSet& o) const;
  bool operator!=(const PointSet& o) const { return !(*this == o); }
  bool operator<(const PointSet& o) const { return bits_ < o.bits_; }

  PointSet complement() const;
  PointSet unite(const PointSet& o) const;
  PointSet intersect(const PointSet& o) const;
  bool subset_of(const PointSet& o) const;

 private:
  SpacePtr space_;
  std::vector<bool> bits_;
};

void require_same_space(const PointSet& a, const PointSet& b);

// [s] relative to the space: all chosen points extending the stem.
PointSet basic(const SpacePtr& space, const std::string& stem);

// --- the brute-force oracle ----------------------------------------------

// Set-algebra expressions evaluated literally, point by point.  This is the
// independent reference every other semantics is tested against, so it does
// no bit tricks: membership is decided per point by structural recursion.
struct SetExpr;
using SetExprPtr = std::shared_ptr<const SetExpr>;

struct SetExpr {
  enum Op { leaf, union_, intersection, complement } op = leaf;
  PointSet value;                  // for leaf
  std::vector<SetExprPtr> args;    // for the others

  static SetExprPtr lit(PointSet s);
  static SetExprPtr unite(std::vector<SetExprPtr> xs);
  static SetExprPtr intersect(std::vector<SetExprPtr> xs);
  static SetExprPtr negate(SetExprPtr x);
};

PointSet eval_oracle(const SetExprPtr& expr, const SpacePtr& space);

// --- Cantor embedding ------------------------------------------------------

// Indicator-vector map x |-> (x in B_0, x in B_1, ...).  Injective exactly
// when the basis separates points; throws NotT0 otherwise, naming two
// offending points.
std::vector<std::vector<bool>> embed_into_cantor(const SpacePtr& space,
                                                 const std::vector<PointSet>& basis);

// --- universal relations ----------------------------------------------------

// pair(slice, i) = slice*L + i on the {0..m-1} x {0..L-1} rectangle.
std::size_t pair_index(std::size_t slice, std::size_t i, std::size_t L);

// The finite universal relation over a parameter space of 0/1 rows.
// Level 1: (y,x) in U iff x lies in the union of the basis sets selected
// by y.  Level 2: (y,x) in U iff some slice row of y selects a level-1
// section whose complement contains x.
class UniversalRelation {
 public:
  static UniversalRelation build(int level, const SpacePtr& space,
                                 const std::vector<PointSet>& basis, std::size_t slices = 0,
                                 std::size_t param_cap = kDefaultParamCap);

  int level() const { return level_; }
  std::size_t param_length() const { return param_len_; }
  std::size_t param_rows() const { return std::size_t{1} << param_len_; }

  bool contains(const std::vector<bool>& row, int point_idx) const;
  PointSet section(const std::vector<bool>& row) const;
  std::vector<bool> row_of(std::size_t r) const;  // r-th row, LSB first

  // all distinct sections, for the exhaustive universality checks
  std::vector<PointSet> all_sections() const;

 private:
  int level_ = 1;
  SpacePtr space_;
  std::vector<PointSet> basis_;
  std::size_t slices_ = 0;
  std::size_t param_len_ = 0;
};

}  // namespace gbh::space
