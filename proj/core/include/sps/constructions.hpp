#ifndef SPS_CONSTRUCTIONS_HPP
#define SPS_CONSTRUCTIONS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <sps/affine_plane.hpp>
#include <sps/constraint_profile.hpp>
#include <sps/set_pair_system.hpp>

namespace sps {

/// Pairs-per-direction when extending an affine plane: I uses all q
/// parallel lines, II uses q-1, III uses h=(q-1)/2 (odd q only).
enum class ExtensionMode { I, II, III };

/// A generated system together with the profile it is claimed to satisfy.
/// Emission re-verifies the claim; a record that fails is a construction
/// bug and throws std::logic_error.
struct ConstructionRecord {
    SetPairSystem system;
    ConstraintProfile declared_profile;
    std::size_t declared_size = 0;
    std::string citation;
};

ConstructionRecord make_record(SetPairSystem system, ConstraintProfile profile,
                               std::size_t declared_size, std::string citation);

/// All a-subsets of an (a+b)-set in lexicographic order, paired with
/// their complements. Attains the binomial bound with equality.
ConstructionRecord standard_example(unsigned a, unsigned b,
                                    std::size_t size_budget = 200000);

/// Pairs (base_A + stride*i, base_B + stride*i) mod modulus for
/// i = 0..count-1 on the ground set Z_modulus.
SetPairSystem cyclic_family(const std::vector<unsigned>& base_a,
                            const std::vector<unsigned>& base_b,
                            unsigned modulus, unsigned count, unsigned stride = 1);

/// Named small systems: w22, w23, mod10_33, mod8_n3, pg23_diff_n4,
/// mod14_lin3, ag24_plus10.
ConstructionRecord catalog(const std::string& name);
std::vector<std::string> catalog_names();

/// Size-multiplicative composition: one fresh copy of s1 per pair of s2,
/// each copy's pairs unioned with the hosting pair of s2. Set-size
/// bounds add. With one_cross set both inputs must be 1-cross
/// intersecting and the output is 1-cross; otherwise plain
/// cross-intersecting in and out.
SetPairSystem product(const SetPairSystem& s1, const SetPairSystem& s2,
                      bool one_cross = true);

/// Iterated product of floor(n/2) copies of w22, times the (1,1)
/// standard example when n is odd: size 5^(n/2) resp. 2*5^((n-1)/2).
ConstructionRecord w22_power(unsigned n, std::size_t size_budget = 200000);

/// product(standard(1,ceil(n/2)), standard(1,floor(n/2))): the extremal
/// (2,n) system of size (floor(n/2)+1)(ceil(n/2)+1), n >= 4.
ConstructionRecord star_extremal_2n(unsigned n);

/// Two hub vertices plus s(s-1) private vertices; size s, s-uniform,
/// both sides 1-intersecting, 1-cross.
ConstructionRecord double_star(unsigned s);

/// Supplies a fresh inner system on its own ground set [0, g); the
/// extension relabels copies onto consecutive vertex ranges.
using InnerSupplier = std::function<SetPairSystem()>;

/// Pairs parallel lines of the plane per the mode, gluing a fresh inner
/// copy per direction to restore (1-)cross intersection.
SetPairSystem extend_plane(const AffinePlane& plane, ExtensionMode mode,
                           const InnerSupplier& inner_supplier);

/// C_1(q)/C_2(q)/C_3(q): plane extensions with double-star inners.
/// Sizes q^2+q, q^2-1, (q^2-1)/2.
ConstructionRecord c_family(int kind, unsigned q);

/// Large constructions: greedy choice of the largest odd prime q and
/// smallest odd prime p meeting the kind's feasibility system, then the
/// plane extension with inner copies drawn from c_family(kind, p).
ConstructionRecord final_construction(int kind, unsigned n);

/// Picks the (q, p) pair final_construction would use; throws when the
/// feasibility system has no solution for this n.
std::pair<unsigned, unsigned> final_construction_primes(int kind, unsigned n);

/// AG(2,4) with ten extra vertices stitched across the five parallel
/// classes; size 10, 5-uniform, linear on both sides, 1-cross.
ConstructionRecord ag24_plus10();

} // namespace sps

#endif
