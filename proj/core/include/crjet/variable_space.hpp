#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace crjet {

enum class VariableKind { holomorphic, antiholomorphic, real };

class VariableSpace;
using SpacePtr = std::shared_ptr<const VariableSpace>;

/// Ordered set of named variables with a conjugation rule.
///
/// A space is either *closed* under conjugation (every holomorphic variable
/// has its antiholomorphic partner in the space, real variables are fixed)
/// or *one-sided* (only holomorphic, or only antiholomorphic, variables). The
/// conjugate of a series over a one-sided space lives in the mirror space.
///
/// `family` groups spaces that describe the same complex coordinates (for
/// example "source" for (z, w) and its realification (x, y, u, v)); two
/// spaces are equal iff family, names and kinds agree.
class VariableSpace {
 public:
  /// Closed space. `conjugation` must be an involution mapping holomorphic
  /// and antiholomorphic positions onto each other and fixing real ones.
  VariableSpace(std::string family, std::vector<std::string> names,
                std::vector<VariableKind> kinds, std::vector<std::size_t> conjugation);

  /// One-sided space: all kinds must be holomorphic, or all antiholomorphic.
  VariableSpace(std::string family, std::vector<std::string> names,
                std::vector<VariableKind> kinds);

  // Standard layouts. `m` complex z-variables and `d` complex w-variables.
  /// (z1..zm, w1..wd)
  static SpacePtr holomorphic(const std::string& family, std::size_t m, std::size_t d);
  /// (z1..zm, ~z1..~zm, w1..wd, ~w1..~wd)
  static SpacePtr full(const std::string& family, std::size_t m, std::size_t d);
  /// (x1..xm, y1..ym, u1..ud, v1..vd), with z = x + iy and w = u + iv.
  static SpacePtr real_coordinates(const std::string& family, std::size_t m, std::size_t d);
  /// (x1..xm, y1..ym, u1..ud): the real coordinates without v.
  static SpacePtr graph(const std::string& family, std::size_t m, std::size_t d);

  const std::string& family() const noexcept { return family_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  VariableKind kind(std::size_t i) const { return kinds_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool is_closed() const noexcept { return closed_; }
  /// Position of the conjugate variable; requires a closed space.
  std::size_t conjugate_of(std::size_t i) const;
  /// The space holding conjugates of this space's variables: itself when
  /// closed, the mirrored one-sided space otherwise.
  SpacePtr conjugate_space(const SpacePtr& self) const;

  friend bool operator==(const VariableSpace& a, const VariableSpace& b) noexcept {
    return a.family_ == b.family_ && a.names_ == b.names_ && a.kinds_ == b.kinds_;
  }

 private:
  void check_names() const;

  std::string family_;
  std::vector<std::string> names_;
  std::vector<VariableKind> kinds_;
  std::vector<std::size_t> conjugation_;
  bool closed_ = false;
};

bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept;

/// `~name` for a holomorphic name, `name` without `~` for an antiholomorphic one.
std::string conjugate_name(const std::string& name);

}  // namespace crjet
