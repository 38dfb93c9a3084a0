#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "d2/chain_map.hpp"
#include "d2/integer.hpp"

namespace d2 {

/// The unit group (Z/2^m)^* with m >= 2; it has 2^{m-1} elements.
class UnitGroupModulus {
 public:
  explicit UnitGroupModulus(int m);

  int exponent() const noexcept { return m_; }
  Integer modulus() const;
  Integer unit_count() const;
  /// x mod 2^m in [0, 2^m).
  Integer reduce(const Integer& x) const;
  Integer pow(const Integer& base, const Integer& e) const;

 private:
  int m_;
};

/// 2^m divides 3^{2^{m-3}} - 1 + 2^{m-1}. Throws RangeViolation for m < 4.
bool lemma_divisibility(int m);

/// Multiplicative order of 3 mod 2^m (a power of two, found by squaring).
Integer order_of_three(int m);

/// No power of 3 is -1 mod 2^m (m >= 3): checked through the residues of
/// 3^k mod 8 and, when the order of 3 is small enough, by a direct scan.
bool minus_one_not_power_of_three(int m);

enum class GenerationMethod { Exhaustive, Structural };

std::string to_string(GenerationMethod method);

struct GenerationResult {
  bool generates = false;
  Integer subgroup_size;
  GenerationMethod method = GenerationMethod::Exhaustive;
};

inline constexpr int kDefaultExhaustiveLimit = 20;

/// Whether `gens` generate (Z/2^m)^*.
///
/// Up to `exhaustive_limit` the subgroup is enumerated by breadth-first
/// closure. Beyond it, a set containing 3 and -1 is decided by the order of 3
/// together with minus_one_not_power_of_three; any other set is decided from
/// the coordinates of its elements in (Z/2^m)^* = <-1> x <5>.
/// Throws NonUnit for an even generator.
GenerationResult generates_units(const std::vector<Integer>& gens, int m, int exhaustive_limit = kDefaultExhaustiveLimit);

inline constexpr std::size_t kDefaultWitnessDimensionLimit = 100;

/// Surjectivity of the Swan map for D_{2^m} (n = 2^{m-2}) from the witnesses
/// 3 and -1 plus generation of the units by {3, -1}.
struct SurjectivityReport {
  int m = 0;
  long long n = 0;
  bool witness_computed = false;
  std::optional<SwanWitnessReport> witness;
  std::string witness_note;
  GenerationResult generation;
  /// Chain-map witnesses and unit generation both verified for this m.
  bool full_certificate = false;
  /// Generation verified; witnesses verified or out of the size limit.
  bool ok = false;
};

/// The chain-map witness is computed only when its 12n x 12n integer matrix
/// fits within both `witness_dimension_limit` and dimension_limit().
SurjectivityReport swan_surjectivity_report(int m, std::size_t witness_dimension_limit = kDefaultWitnessDimensionLimit,
                                            int exhaustive_limit = kDefaultExhaustiveLimit);

}  // namespace d2
