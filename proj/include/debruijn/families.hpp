#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "debruijn/boolfn.hpp"
#include "debruijn/gpo.hpp"
#include "debruijn/primpoly.hpp"

namespace debruijn {

/// One generated sequence and the inputs that produced it.
struct FamilyEntry {
  std::string params;  ///< per-entry parameters, e.g. "t=2" or "g=1011"
  AnfFunction function;
  State initial;
  PeriodicSequence sequence;
};

struct FamilyResult {
  std::string family;  ///< F1..F6 or Extra1..Extra4
  std::string params;  ///< family-level parameters, e.g. "n=6 m=4 h=..."
  std::vector<FamilyEntry> entries;
  std::size_t distinct_count = 0;  ///< under cyclic equivalence
};

/// Number of cyclically distinct sequences among `entries`.
std::size_t count_distinct(const std::vector<FamilyEntry>& entries);

/// Groups of initial states whose outputs coincide up to rotation (only groups of size >= 2).
std::vector<std::vector<State>> collision_groups(const FamilyResult& result);

/// Runs the FSR of h from 0^m and returns its output if it is de Bruijn of order m;
/// throws NotDeBruijnSeed otherwise.
PeriodicSequence de_bruijn_seed_sequence(const AnfFunction& h);

FamilyResult f1_generate(const AnfFunction& h, int n);
std::uint64_t f1_count(int m, int n);

/// 1 + x_t x_{t+1} ... x_{n-1}
AnfFunction f2_function(int n, int t);
FamilyResult f2_generate(int n, int t);

/// 1 + x_{n-3} + x_{n-1} + x_{n-3}x_{n-2} + x_{n-2}x_{n-1} + x_{n-3}x_{n-2}x_{n-1}
AnfFunction f3_function(int n);
FamilyResult f3_generate(int n);

/// Parameters for the extra function table; unused fields are ignored.
struct ExtraParams {
  int t = 0;
  int k = 0;
  int l = 0;
};

/// Rows 1-4 of the table of extra functions (each paired with b = 0^n):
///   1: x_{n-1} + x_t x_{n-1}               0 < t < n-1, n >= 3
///   2: x_{n-1} + x_1 x_2 ... x_{n-1}        n >= 3
///   3: x_t x_{t+1} + x_{t+1} x_{n-1}        0 < t < n-2, n >= 4
///   4: x_k x_{n-1} + x_l x_{n-1}            0 < k < l < n-1, n >= 4
AnfFunction extra_function(int kind, int n, const ExtraParams& params = {});
FamilyResult extra_generate(int kind, int n, const ExtraParams& params = {});
/// Every legal parameter choice of row `kind` at order n.
std::vector<ExtraParams> extra_parameter_space(int kind, int n);

FamilyResult f4_generate(int n);
FamilyResult f5_enumerate(int n);
FamilyResult f6_enumerate(int n);

std::uint64_t euler_totient(std::uint64_t k);
std::uint64_t f5_count_formula(int n);

}  // namespace debruijn
