// Copyright 2026 The FRC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRC_CORE_TYPES_H_
#define FRC_CORE_TYPES_H_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace frc {

// Absolute tolerance for every real-valued equality check in the library.
inline constexpr double kTolerance = 1e-9;

inline constexpr std::string_view kOtherClass = "other";

// Ordered set of sentiment classes. The order defines the layout of every
// per-class vector (memberships, weights, probabilities).
class ClassSet {
 public:
  // Requires at least two distinct, non-empty names. With `includes_other`,
  // the catch-all class is appended when not already listed.
  ClassSet(std::vector<std::string> names, bool includes_other = false);

  // {positive, negative}, the layout used by every experiment.
  static ClassSet Binary();

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  bool includes_other() const { return includes_other_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const {
    return index_of(name).has_value();
  }

  // Indices of every class except the catch-all one.
  std::vector<std::size_t> polar_indices() const;

  friend bool operator==(const ClassSet&, const ClassSet&) = default;

 private:
  std::vector<std::string> names_;
  bool includes_other_ = false;
};

// Per-class membership degrees in [0,1]. Degrees are independent across
// classes and are not required to sum to one.
class MembershipVector {
 public:
  MembershipVector() = default;
  // Throws OutOfRange when any value is NaN or outside [0,1].
  explicit MembershipVector(std::vector<double> values);
  MembershipVector(std::initializer_list<double> values)
      : MembershipVector(std::vector<double>(values)) {}

  static MembershipVector Zeros(std::size_t size);
  // Clamps into [0,1]; NaN is still rejected.
  static MembershipVector Clamped(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t index) const { return values_[index]; }
  double at(std::size_t index) const { return values_.at(index); }
  std::span<const double> values() const { return values_; }
  double max() const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const MembershipVector&,
                         const MembershipVector&) = default;

 private:
  std::vector<double> values_;
};

struct Keyword {
  std::string surface;
  MembershipVector memberships;
};

// A portion of the input text without emotional overlap, with the keywords
// it contains and its aggregated memberships.
struct SubUnit {
  std::string text;
  std::vector<Keyword> keywords;
  MembershipVector memberships;
};

// Class-specific fusion weights: weight(c, j) for class c and sub-unit j.
// Every weight is nonnegative and each class row sums to one.
class WeightMatrix {
 public:
  // Throws InvalidArgument on ragged rows, negative weights, or a row whose
  // sum is not one within kTolerance.
  explicit WeightMatrix(std::vector<std::vector<double>> rows);

  std::size_t class_count() const { return rows_.size(); }
  std::size_t subunit_count() const { return subunit_count_; }
  double weight(std::size_t class_index, std::size_t subunit) const {
    return rows_[class_index][subunit];
  }
  std::span<const double> row(std::size_t class_index) const {
    return rows_.at(class_index);
  }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<double>> rows_;
  std::size_t subunit_count_ = 0;
};

}  // namespace frc

#endif  // FRC_CORE_TYPES_H_
