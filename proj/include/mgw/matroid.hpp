#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mgw/field.hpp"
#include "mgw/subset.hpp"

namespace mgw {

/// A matroid on E = {1, ..., n} given by a rank oracle. Values are immutable and
/// cheap to copy; the dual shares its underlying matroid.
class Matroid {
 public:
  enum class Kind { linear, circuits, uniform, dual };

  /// r(X) = rank of the columns of `h` indexed by X.
  static Matroid from_parity_check(FieldMatrix h);
  /// Matroid of the code spanned by the rows of `g`: the dual of the column
  /// matroid of `g`, so that n(X) = dim{w in rowspace(g) : Supp(w) in X}.
  static Matroid from_generator(const FieldMatrix& g);
  /// X is independent iff it contains no listed circuit. The list must be an
  /// antichain of nonempty subsets of {1..n}; the remaining circuit axioms are
  /// trusted (use validate_axioms to check them).
  static Matroid from_circuits(int n, std::vector<SubsetMask> circuits);
  /// U_{r,n}: r(X) = min(|X|, r).
  static Matroid uniform(int r, int n);

  /// r*(X) = |X| + r(E - X) - r(E).
  Matroid dual() const;

  Kind kind() const;
  int size() const { return n_; }
  SubsetMask ground() const { return SubsetMask::full(n_); }

  int rank(SubsetMask x) const;
  int nullity(SubsetMask x) const { return x.size() - rank(x); }
  bool is_independent(SubsetMask x) const { return rank(x) == x.size(); }

  /// r(E)
  int rank() const { return full_rank_; }
  /// t = n(E), the number of levels in every weight hierarchy.
  int corank() const { return n_ - full_rank_; }

  /// The stored circuit list for circuit-defined matroids, otherwise null.
  const std::vector<SubsetMask>* stored_circuits() const;
  /// For dual matroids, the matroid being dualised; otherwise null.
  const Matroid* dual_of() const;
  /// For linear matroids, the matrix whose column matroid this is.
  const FieldMatrix* matrix() const;

  std::string describe() const;

 private:
  struct Linear {
    FieldMatrix h;
  };
  struct Circuits {
    std::vector<SubsetMask> list;
  };
  struct Uniform {
    int r;
  };
  struct Dual {
    std::shared_ptr<const Matroid> of;
  };

  Matroid(int n, std::variant<Linear, Circuits, Uniform, Dual> repr);

  int n_ = 0;
  int full_rank_ = 0;
  std::shared_ptr<const std::variant<Linear, Circuits, Uniform, Dual>> repr_;
};

using RankFunction = std::function<int(SubsetMask)>;

struct AxiomViolation {
  /// "R1", "R2", "R3", "unit-increase" or "nullity-supermodular".
  std::string axiom;
  SubsetMask x;
  SubsetMask y;
};

struct AxiomReport {
  int n = 0;
  bool exhaustive = true;
  std::uint64_t checked_pairs = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

struct AxiomCheckOptions {
  /// Ground sets up to this size are checked on every subset (pair); larger
  /// ones on `samples` random pairs.
  int exhaustive_max_n = 12;
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
  /// Stop recording after this many violations.
  std::size_t max_violations = 64;
};

/// Checks (R1) 0 <= r(X) <= |X|, (R2) monotonicity, (R3) submodularity, unit
/// rank increase and nullity supermodularity for an arbitrary rank function.
AxiomReport validate_rank_function(int n, const RankFunction& rank,
                                   const AxiomCheckOptions& options = {});
AxiomReport validate_axioms(const Matroid& m, const AxiomCheckOptions& options = {});

/// Full table r(X) indexed by mask, for exhaustive checks. n <= 24.
std::vector<std::uint8_t> rank_table(const Matroid& m);

}  // namespace mgw
