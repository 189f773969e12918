#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "unicomm/matrix.hpp"

namespace unicomm {

/// |SL_n(F_q)| = prod_{i<n} (q^n - q^i) / (q - 1). Throws BudgetExceeded on overflow.
std::uint64_t sl_order(std::uint64_t q, std::size_t n);

inline constexpr std::uint64_t kDefaultBudget = 200000;

/// Every element of SL_n(F_q), stored as packed element codes. Arithmetic is
/// done on small lookup tables and does not go through the linalg module, so
/// the table can serve as an independent check of it.
class GroupTable {
 public:
  using Id = std::uint32_t;

  /// Throws BudgetExceeded when |SL_n(F_q)| exceeds `budget`, UnsupportedField
  /// for Q or q > 256.
  static GroupTable build(Field field, std::size_t n, std::uint64_t budget = kDefaultBudget);

  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] std::size_t order() const { return count_; }
  [[nodiscard]] Id identity() const { return identity_; }
  [[nodiscard]] const std::vector<Id>& u2_ids() const { return u2_; }
  [[nodiscard]] bool is_u2(Id id) const { return u2_flag_[id]; }
  [[nodiscard]] bool is_scalar(Id id) const;

  [[nodiscard]] Matrix matrix(Id id) const;
  [[nodiscard]] std::optional<Id> find(const Matrix& m) const;

  [[nodiscard]] Id multiply(Id a, Id b) const;
  [[nodiscard]] Id inverse(Id a) const { return inverse_[a]; }
  [[nodiscard]] Id commutator(Id x, Id y) const;
  /// Element code of the trace.
  [[nodiscard]] std::uint16_t trace(Id id) const;

  // Field tables, exposed for the trace check.
  [[nodiscard]] std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[a * q_ + b]; }
  [[nodiscard]] std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[a * q_ + b]; }
  [[nodiscard]] std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }

 private:
  GroupTable() = default;
  [[nodiscard]] const std::uint16_t* entries(Id id) const { return codes_.data() + std::size_t{id} * n_ * n_; }
  [[nodiscard]] std::uint64_t key(const std::uint16_t* e) const;
  [[nodiscard]] Id lookup(const std::uint16_t* e) const;
  void product(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) const;
  [[nodiscard]] std::uint16_t det(std::vector<std::uint16_t> m) const;
  [[nodiscard]] std::vector<std::uint16_t> invert(const std::uint16_t* m) const;
  [[nodiscard]] bool square_zero_shift(const std::uint16_t* m) const;

  Field field_ = Field::rationals();
  std::size_t n_ = 0;
  std::uint32_t q_ = 0;
  std::size_t count_ = 0;
  Id identity_ = 0;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::vector<std::uint16_t> codes_;
  std::unordered_map<std::uint64_t, Id> index_;
  std::vector<Id> inverse_;
  std::vector<Id> u2_;
  std::vector<bool> u2_flag_;
};

/// All values [X, Y] with X, Y in U2, deduplicated and sorted.
std::vector<GroupTable::Id> commutator_generators(const GroupTable& t);

inline constexpr int kUnreachable = -1;

/// Minimal number of U2-commutator factors per element (kUnreachable if none).
struct LengthTable {
  std::vector<int> length;
  [[nodiscard]] int max_finite() const;
  [[nodiscard]] std::size_t reachable() const;
};

/// Breadth-first distances from I under right multiplication by the generators.
LengthTable bfs_lengths(const GroupTable& t, const std::vector<GroupTable::Id>& generators);
LengthTable bfs_lengths(const GroupTable& t);

/// Sorted ids of the commutator subgroup. Small groups are closed over all
/// [x, y]; larger ones use the normal closure of commutators of U2 generators.
std::vector<GroupTable::Id> derived_subgroup(const GroupTable& t);
/// The normal-closure method regardless of size (for cross-checks).
std::vector<GroupTable::Id> derived_subgroup_normal_closure(const GroupTable& t);

struct TraceCheck {
  std::size_t nonscalar_checked = 0;
  std::vector<GroupTable::Id> counterexamples;
  [[nodiscard]] bool ok() const { return counterexamples.empty(); }
};

/// For nonscalar elements of SL_2: length 1 iff tr - 2 is a nonzero square.
TraceCheck check_trace_characterization(const GroupTable& t, const LengthTable& lengths);

/// CSV: id,matrix,trace,is_u2,bfs_length (unreachable lengths written as "inf").
std::string lengths_csv(const GroupTable& t, const LengthTable& lengths);

/// Membership in SL_2(F)' for |F| <= 3, from a cached oracle table.
bool in_small_derived_subgroup(const Matrix& a);

}  // namespace unicomm
