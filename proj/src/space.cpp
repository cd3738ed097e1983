#include "gbh/space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gbh::space {

char letter_char(int v) {
  if (v < 0 || v >= 36) fail("BadLetter", "letters range over 0..35");
  return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + (v - 10));
}

int letter_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  fail("BadLetter", std::string("not a letter: '") + c + "'");
}

FiniteSpace::FiniteSpace(int b, int d, std::vector<std::string> points)
    : b_(b), d_(d), points_(std::move(points)) {}

std::shared_ptr<const FiniteSpace> FiniteSpace::make(int b, int d,
                                                     std::vector<std::string> points,
                                                     std::size_t cap) {
  if (b < 2) fail("SchemaError", "branching must be at least 2");
  if (d < 1) fail("SchemaError", "depth must be at least 1");
  double grid = std::pow(static_cast<double>(b), d);
  if (grid > static_cast<double>(cap))
    fail("CapExceeded", "the full grid has " + std::to_string(grid) + " points, cap is " +
                            std::to_string(cap));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != d)
      fail("SchemaError", "point '" + p + "' does not have length " + std::to_string(d));
    for (char c : p) {
      if (letter_value(c) >= b) fail("SchemaError", "point '" + p + "' is outside the alphabet");
    }
  }
  return std::shared_ptr<const FiniteSpace>(new FiniteSpace(b, d, std::move(points)));
}

std::shared_ptr<const FiniteSpace> FiniteSpace::full(int b, int d, std::size_t cap) {
  std::vector<std::string> pts;
  std::string cur(static_cast<std::size_t>(d), '0');
  std::function<void(int)> rec = [&](int pos) {
    if (pos == d) {
      pts.push_back(cur);
      return;
    }
    for (int v = 0; v < b; ++v) {
      cur[static_cast<std::size_t>(pos)] = letter_char(v);
      rec(pos + 1);
    }
  };
  double grid = std::pow(static_cast<double>(b), d);
  if (grid > static_cast<double>(cap))
    fail("CapExceeded", "the full grid has " + std::to_string(grid) + " points, cap is " +
                            std::to_string(cap));
  rec(0);
  return make(b, d, std::move(pts), cap);
}

int FiniteSpace::index_of(const std::string& point) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), point);
  if (it == points_.end() || *it != point) return -1;
  return static_cast<int>(it - points_.begin());
}

void validate_stem(const FiniteSpace& space, const std::string& stem) {
  if (static_cast<int>(stem.size()) > space.depth())
    fail("BadStem", "stem '" + stem + "' is longer than the depth " +
                        std::to_string(space.depth()));
  for (char c : stem) {
    if (letter_value(c) >= space.branching())
      fail("BadStem", "stem '" + stem + "' is outside the alphabet");
  }
}

PointSet::PointSet(SpacePtr space, bool all)
    : space_(std::move(space)), bits_(space_->size(), all) {}

PointSet::PointSet(SpacePtr space, const std::vector<std::string>& points)
    : space_(std::move(space)), bits_(space_->size(), false) {
  for (const auto& p : points) {
    int i = space_->index_of(p);
    if (i < 0) fail("SchemaError", "point '" + p + "' is not in the space");
    bits_[static_cast<std::size_t>(i)] = true;
  }
}

bool PointSet::contains(const std::string& point) const {
  int i = space_->index_of(point);
  return i >= 0 && bits_[static_cast<std::size_t>(i)];
}

std::size_t PointSet::count() const {
  std::size_t n = 0;
  for (bool b : bits_) n += b ? 1 : 0;
  return n;
}

std::vector<std::string> PointSet::to_points() const {
  std::vector<std::string> r;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) r.push_back(space_->points()[i]);
  }
  return r;
}

bool PointSet::operator==(const PointSet& o) const {
  return space_ && o.space_ && *space_ == *o.space_ && bits_ == o.bits_;
}

PointSet PointSet::complement() const {
  PointSet r = *this;
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] = !r.bits_[i];
  return r;
}

PointSet PointSet::unite(const PointSet& o) const {
  require_same_space(*this, o);
  PointSet r = *this;
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] = r.bits_[i] || o.bits_[i];
  return r;
}

PointSet PointSet::intersect(const PointSet& o) const {
  require_same_space(*this, o);
  PointSet r = *this;
  for (std::size_t i = 0; i < r.bits_.size(); ++i) r.bits_[i] = r.bits_[i] && o.bits_[i];
  return r;
}

bool PointSet::subset_of(const PointSet& o) const {
  require_same_space(*this, o);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !o.bits_[i]) return false;
  }
  return true;
}

void require_same_space(const PointSet& a, const PointSet& b) {
  if (!a.space() || !b.space() || !(*a.space() == *b.space()))
    fail("SpaceMismatch", "operands live over different spaces");
}

PointSet basic(const SpacePtr& space, const std::string& stem) {
  validate_stem(*space, stem);
  PointSet r(space);
  for (std::size_t i = 0; i < space->points().size(); ++i) {
    const std::string& p = space->points()[i];
    if (p.compare(0, stem.size(), stem) == 0) r.add(static_cast<int>(i));
  }
  return r;
}

// --- oracle ------------------------------------------------------------

SetExprPtr SetExpr::lit(PointSet s) {
  auto e = std::make_shared<SetExpr>();
  e->op = leaf;
  e->value = std::move(s);
  return e;
}

SetExprPtr SetExpr::unite(std::vector<SetExprPtr> xs) {
  auto e = std::make_shared<SetExpr>();
  e->op = union_;
  e->args = std::move(xs);
  return e;
}

SetExprPtr SetExpr::intersect(std::vector<SetExprPtr> xs) {
  auto e = std::make_shared<SetExpr>();
  e->op = intersection;
  e->args = std::move(xs);
  return e;
}

SetExprPtr SetExpr::negate(SetExprPtr x) {
  auto e = std::make_shared<SetExpr>();
  e->op = complement;
  e->args = {std::move(x)};
  return e;
}

namespace {

void check_operands(const SetExpr& e, const SpacePtr& space) {
  if (e.op == SetExpr::leaf) {
    if (!e.value.space() || !(*e.value.space() == *space))
      fail("SpaceMismatch", "an oracle operand lives over a different space");
    return;
  }
  for (const auto& a : e.args) check_operands(*a, space);
}

bool member(const SetExpr& e, int idx) {
  switch (e.op) {
    case SetExpr::leaf: return e.value.contains(idx);
    case SetExpr::union_: {
      for (const auto& a : e.args) {
        if (member(*a, idx)) return true;
      }
      return false;
    }
    case SetExpr::intersection: {
      for (const auto& a : e.args) {
        if (!member(*a, idx)) return false;
      }
      return true;
    }
    case SetExpr::complement: return !member(*e.args[0], idx);
  }
  return false;
}

}  // namespace

PointSet eval_oracle(const SetExprPtr& expr, const SpacePtr& space) {
  check_operands(*expr, space);
  PointSet r(space);
  for (std::size_t i = 0; i < space->size(); ++i) {
    if (member(*expr, static_cast<int>(i))) r.add(static_cast<int>(i));
  }
  return r;
}

// --- Cantor embedding ----------------------------------------------------

std::vector<std::vector<bool>> embed_into_cantor(const SpacePtr& space,
                                                 const std::vector<PointSet>& basis) {
  for (const auto& bset : basis) {
    if (!bset.space() || !(*bset.space() == *space))
      fail("SpaceMismatch", "a basis set lives over a different space");
  }
  std::vector<std::vector<bool>> rows;
  rows.reserve(space->size());
  for (std::size_t i = 0; i < space->size(); ++i) {
    std::vector<bool> row;
    row.reserve(basis.size());
    for (const auto& bset : basis) row.push_back(bset.contains(static_cast<int>(i)));
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i] == rows[j])
        fail("NotT0", "points '" + space->points()[i] + "' and '" + space->points()[j] +
                          "' share every basis membership");
    }
  }
  return rows;
}

// --- universal relations ---------------------------------------------------

std::size_t pair_index(std::size_t slice, std::size_t i, std::size_t L) {
  return slice * L + i;
}

UniversalRelation UniversalRelation::build(int level, const SpacePtr& space,
                                           const std::vector<PointSet>& basis,
                                           std::size_t slices, std::size_t param_cap) {
  if (level != 1 && level != 2) fail("SchemaError", "only levels 1 and 2 are constructed");
  if (level == 2 && slices < 1) fail("SchemaError", "level 2 needs at least one slice");
  for (const auto& bset : basis) {
    if (!bset.space() || !(*bset.space() == *space))
      fail("SpaceMismatch", "a basis set lives over a different space");
  }
  UniversalRelation u;
  u.level_ = level;
  u.space_ = space;
  u.basis_ = basis;
  u.slices_ = level == 1 ? 0 : slices;
  u.param_len_ = level == 1 ? basis.size() : slices * basis.size();
  if (u.param_len_ >= 63 || (std::size_t{1} << u.param_len_) > param_cap)
    fail("CapExceeded", "parameter space of 2^" + std::to_string(u.param_len_) +
                            " rows exceeds the cap " + std::to_string(param_cap));
  return u;
}

bool UniversalRelation::contains(const std::vector<bool>& row, int point_idx) const {
  if (row.size() != param_len_) fail("SchemaError", "parameter row has the wrong length");
  std::size_t L = basis_.size();
  if (level_ == 1) {
    for (std::size_t i = 0; i < L; ++i) {
      if (row[i] && basis_[i].contains(point_idx)) return true;
    }
    return false;
  }
  // level 2: some slice row selects a level-1 section avoiding the point
  for (std::size_t s = 0; s < slices_; ++s) {
    bool in_section = false;
    for (std::size_t i = 0; i < L; ++i) {
      if (row[pair_index(s, i, L)] && basis_[i].contains(point_idx)) {
        in_section = true;
        break;
      }
    }
    if (!in_section) return true;
  }
  return false;
}

PointSet UniversalRelation::section(const std::vector<bool>& row) const {
  PointSet r(space_);
  for (std::size_t i = 0; i < space_->size(); ++i) {
    if (contains(row, static_cast<int>(i))) r.add(static_cast<int>(i));
  }
  return r;
}

std::vector<bool> UniversalRelation::row_of(std::size_t r) const {
  std::vector<bool> row(param_len_, false);
  for (std::size_t i = 0; i < param_len_; ++i) row[i] = ((r >> i) & 1u) != 0;
  return row;
}

std::vector<PointSet> UniversalRelation::all_sections() const {
  std::set<PointSet> seen;
  for (std::size_t r = 0; r < param_rows(); ++r) seen.insert(section(row_of(r)));
  return std::vector<PointSet>(seen.begin(), seen.end());
}

}  // namespace gbh::space
