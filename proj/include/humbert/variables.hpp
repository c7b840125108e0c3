#ifndef HUMBERT_VARIABLES_HPP
#define HUMBERT_VARIABLES_HPP

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace humbert {

/// Number of variables in the fixed global variable set
/// {x, y, z, a1, a2, a3, a4, t0, ..., t14}.
inline constexpr std::size_t kNumVars = 22;
inline constexpr std::size_t kNumFamilyParams = 15;

/// Index of one variable of the global set. The index order is the monomial
/// order's variable order: x > y > z > a1 > ... > a4 > t0 > ... > t14.
class VarId {
public:
  constexpr VarId() = default;
  constexpr explicit VarId(std::uint8_t index) : index_(index) {}

  constexpr std::size_t index() const noexcept { return index_; }

  friend constexpr auto operator<=>(VarId, VarId) = default;

private:
  std::uint8_t index_ = 0;
};

using VarSet = std::bitset<kNumVars>;

namespace var {
inline constexpr VarId x{0};
inline constexpr VarId y{1};
inline constexpr VarId z{2};

/// Branch-point parameter a_i, 1 <= i <= 4.
constexpr VarId a(unsigned i) { return VarId(static_cast<std::uint8_t>(2 + i)); }

/// Family parameter t_i, 0 <= i <= 14.
constexpr VarId t(unsigned i) { return VarId(static_cast<std::uint8_t>(7 + i)); }

inline constexpr VarId a1 = a(1);
inline constexpr VarId a2 = a(2);
inline constexpr VarId a3 = a(3);
inline constexpr VarId a4 = a(4);
} // namespace var

inline std::string_view var_name(VarId v) {
  static constexpr std::array<std::string_view, kNumVars> names = {
      "x",  "y",  "z",  "a1", "a2", "a3",  "a4",  "t0",  "t1",  "t2", "t3",
      "t4", "t5", "t6", "t7", "t8", "t9", "t10", "t11", "t12", "t13", "t14"};
  return names[v.index()];
}

inline std::optional<VarId> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    VarId v(static_cast<std::uint8_t>(i));
    if (var_name(v) == name) return v;
  }
  return std::nullopt;
}

/// Factor order used when printing a monomial: parameters first (a1..a4,
/// t0..t14), then the plane coordinates x, y, z.
inline constexpr std::array<std::uint8_t, kNumVars> kPrintOrder = {
    3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 0, 1, 2};

inline VarSet var_set(std::initializer_list<VarId> vars) {
  VarSet s;
  for (VarId v : vars) s.set(v.index());
  return s;
}

inline const VarSet& plane_vars() {
  static const VarSet s = var_set({var::x, var::y, var::z});
  return s;
}

} // namespace humbert

#endif // HUMBERT_VARIABLES_HPP
