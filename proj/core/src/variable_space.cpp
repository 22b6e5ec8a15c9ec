#include "crjet/variable_space.hpp"

#include <algorithm>
#include <set>

#include "crjet/error.hpp"

namespace crjet {

VariableSpace::VariableSpace(std::string family, std::vector<std::string> names,
                             std::vector<VariableKind> kinds,
                             std::vector<std::size_t> conjugation)
    : family_(std::move(family)),
      names_(std::move(names)),
      kinds_(std::move(kinds)),
      conjugation_(std::move(conjugation)),
      closed_(true) {
  check_names();
  if (conjugation_.size() != names_.size()) {
    throw Error(ErrorCode::invalid_argument, "conjugation must permute every variable");
  }
  for (std::size_t i = 0; i < conjugation_.size(); ++i) {
    const std::size_t j = conjugation_[i];
    if (j >= conjugation_.size() || conjugation_[j] != i) {
      throw Error(ErrorCode::invalid_argument, "conjugation is not an involution");
    }
    const VariableKind a = kinds_[i];
    const VariableKind b = kinds_[j];
    const bool ok = (a == VariableKind::real && i == j) ||
                    (a == VariableKind::holomorphic && b == VariableKind::antiholomorphic) ||
                    (a == VariableKind::antiholomorphic && b == VariableKind::holomorphic);
    if (!ok) {
      throw Error(ErrorCode::invalid_argument,
                  "conjugation must swap holomorphic/antiholomorphic and fix real variables");
    }
  }
}

VariableSpace::VariableSpace(std::string family, std::vector<std::string> names,
                             std::vector<VariableKind> kinds)
    : family_(std::move(family)), names_(std::move(names)), kinds_(std::move(kinds)) {
  check_names();
  if (!kinds_.empty()) {
    const VariableKind first = kinds_.front();
    const bool uniform = std::all_of(kinds_.begin(), kinds_.end(),
                                     [first](VariableKind k) { return k == first; });
    if (!uniform || first == VariableKind::real) {
      throw Error(ErrorCode::invalid_argument,
                  "a one-sided space must be purely holomorphic or purely antiholomorphic");
    }
  }
}

void VariableSpace::check_names() const {
  if (kinds_.size() != names_.size()) {
    throw Error(ErrorCode::invalid_argument, "one kind per variable required");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) {
      throw Error(ErrorCode::invalid_argument, "variable names must be distinct and non-empty");
    }
  }
}

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= count; ++j) out.push_back(stem + std::to_string(j));
  return out;
}

}  // namespace

SpacePtr VariableSpace::holomorphic(const std::string& family, std::size_t m, std::size_t d) {
  std::vector<std::string> names = numbered("z", m);
  for (auto& w : numbered("w", d)) names.push_back(std::move(w));
  std::vector<VariableKind> kinds(names.size(), VariableKind::holomorphic);
  return std::make_shared<const VariableSpace>(family, std::move(names), std::move(kinds));
}

SpacePtr VariableSpace::full(const std::string& family, std::size_t m, std::size_t d) {
  std::vector<std::string> names;
  std::vector<VariableKind> kinds;
  std::vector<std::size_t> conj;
  auto block = [&](const std::string& stem, std::size_t count) {
    const std::size_t base = names.size();
    for (std::size_t j = 0; j < count; ++j) {
      names.push_back(stem + std::to_string(j + 1));
      kinds.push_back(VariableKind::holomorphic);
      conj.push_back(base + count + j);
    }
    for (std::size_t j = 0; j < count; ++j) {
      names.push_back("~" + stem + std::to_string(j + 1));
      kinds.push_back(VariableKind::antiholomorphic);
      conj.push_back(base + j);
    }
  };
  block("z", m);
  block("w", d);
  return std::make_shared<const VariableSpace>(family, std::move(names), std::move(kinds),
                                               std::move(conj));
}

namespace {

SpacePtr real_space(const std::string& family, std::size_t m, std::size_t d, bool with_v) {
  std::vector<std::string> names = numbered("x", m);
  for (auto& s : numbered("y", m)) names.push_back(std::move(s));
  for (auto& s : numbered("u", d)) names.push_back(std::move(s));
  if (with_v) {
    for (auto& s : numbered("v", d)) names.push_back(std::move(s));
  }
  std::vector<VariableKind> kinds(names.size(), VariableKind::real);
  std::vector<std::size_t> conj(names.size());
  for (std::size_t i = 0; i < conj.size(); ++i) conj[i] = i;
  return std::make_shared<const VariableSpace>(family, std::move(names), std::move(kinds),
                                               std::move(conj));
}

}  // namespace

SpacePtr VariableSpace::real_coordinates(const std::string& family, std::size_t m, std::size_t d) {
  return real_space(family, m, d, true);
}

SpacePtr VariableSpace::graph(const std::string& family, std::size_t m, std::size_t d) {
  return real_space(family, m, d, false);
}

std::optional<std::size_t> VariableSpace::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VariableSpace::conjugate_of(std::size_t i) const {
  if (!closed_) {
    throw Error(ErrorCode::invalid_argument, "one-sided space has no internal conjugation");
  }
  return conjugation_.at(i);
}

SpacePtr VariableSpace::conjugate_space(const SpacePtr& self) const {
  if (closed_) return self;
  std::vector<std::string> names;
  std::vector<VariableKind> kinds;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    names.push_back(conjugate_name(names_[i]));
    kinds.push_back(kinds_[i] == VariableKind::holomorphic ? VariableKind::antiholomorphic
                                                           : VariableKind::holomorphic);
  }
  return std::make_shared<const VariableSpace>(family_, std::move(names), std::move(kinds));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string conjugate_name(const std::string& name) {
  if (!name.empty() && name[0] == '~') return name.substr(1);
  return "~" + name;
}

}  // namespace crjet
