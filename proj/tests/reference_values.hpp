#pragma once

// Reference values from oracles/generate_oracles.py (mpmath, 50 digits).
// The crossing lengths there are products of cuff loops built from seams
// alone, not the orthogeodesic construction the library uses.

namespace hyperfn::ref {

inline constexpr double kSeam222 = 1.7049128323580136912;
inline constexpr double kSeam220 = 1.5438736658106094501;
inline constexpr double kHandle22 = 2.1727477060199816949;
inline constexpr double kAsinh1 = 0.88137358701954302523;

// Two pants glued along a curve of length 0.9; the first has further cuffs
// 0.8 (slot 1) and 1.3 (slot 2), the second 1.1 and 0.6.
struct XPieceRow {
  double twist;
  double type0_k0;
  double type1_k0;
  double type1_k1;
};
inline constexpr XPieceRow kXPiece[] = {
    {0.35, 9.2782047492964261759, 9.2208757196493994896, 9.5334001819888775604},
    {-0.35, 9.2782047492964261759, 9.5334001819888775604, 9.2208757196493994896},
    {1.25, 9.9634486267361500887, 9.5334001819888775604, 10.533453924520801314},
};

// One-holed torus: cuff 0.9 glued to itself, boundary 1.4, twist 0.35.
inline constexpr double kHandleCrossing = 3.1593184290462291523;

}  // namespace hyperfn::ref
