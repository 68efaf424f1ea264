#include "mgw/matroid.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mgw/error.hpp"

namespace mgw {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw InputError("ground set size " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxGroundSize));
  }
}

// Grows an independent set in ascending label order; an element is kept when
// the enlarged set contains no circuit.
int circuit_rank(const std::vector<SubsetMask>& circuits, SubsetMask x) {
  SubsetMask basis;
  for (int label : x.labels()) {
    const SubsetMask grown = basis.with(label);
    const bool dependent = std::any_of(circuits.begin(), circuits.end(), [&](SubsetMask c) {
      return c.contains(label) && c.is_subset_of(grown);
    });
    if (!dependent) basis = grown;
  }
  return basis.size();
}

}  // namespace

Matroid::Matroid(int n, std::variant<Linear, Circuits, Uniform, Dual> repr)
    : n_(n),
      repr_(std::make_shared<const std::variant<Linear, Circuits, Uniform, Dual>>(
          std::move(repr))) {
  full_rank_ = rank(ground());
}

Matroid Matroid::from_parity_check(FieldMatrix h) {
  const int n = static_cast<int>(h.cols());
  check_ground_size(n);
  return Matroid(n, Linear{std::move(h)});
}

Matroid Matroid::from_generator(const FieldMatrix& g) {
  return from_parity_check(g).dual();
}

Matroid Matroid::from_circuits(int n, std::vector<SubsetMask> circuits) {
  check_ground_size(n);
  for (SubsetMask c : circuits) {
    if (c.empty()) throw InputError("the empty set cannot be a circuit");
    if (!c.fits(n)) {
      throw InputError("circuit " + c.to_string() + " is not a subset of 1.." + std::to_string(n));
    }
  }
  std::sort(circuits.begin(), circuits.end(), by_size_then_mask);
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (circuits[j].is_proper_subset_of(circuits[i])) {
        throw InputError("circuit list is not an antichain: " + circuits[j].to_string() +
                         " is contained in " + circuits[i].to_string());
      }
    }
  }
  return Matroid(n, Circuits{std::move(circuits)});
}

Matroid Matroid::uniform(int r, int n) {
  check_ground_size(n);
  if (r < 0 || r > n) {
    throw InputError("uniform matroid needs 0 <= r <= n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));
  }
  return Matroid(n, Uniform{r});
}

Matroid Matroid::dual() const {
  return Matroid(n_, Dual{std::make_shared<const Matroid>(*this)});
}

Matroid::Kind Matroid::kind() const {
  return std::visit(overloaded{[](const Linear&) { return Kind::linear; },
                               [](const Circuits&) { return Kind::circuits; },
                               [](const Uniform&) { return Kind::uniform; },
                               [](const Dual&) { return Kind::dual; }},
                    *repr_);
}

int Matroid::rank(SubsetMask x) const {
  return std::visit(
      overloaded{
          [&](const Linear& l) { return static_cast<int>(column_rank(l.h, x)); },
          [&](const Circuits& c) { return circuit_rank(c.list, x); },
          [&](const Uniform& u) { return std::min(x.size(), u.r); },
          [&](const Dual& d) { return x.size() + d.of->rank(ground() - x) - d.of->rank(); }},
      *repr_);
}

const std::vector<SubsetMask>* Matroid::stored_circuits() const {
  const auto* c = std::get_if<Circuits>(repr_.get());
  return c ? &c->list : nullptr;
}

const Matroid* Matroid::dual_of() const {
  const auto* d = std::get_if<Dual>(repr_.get());
  return d ? d->of.get() : nullptr;
}

const FieldMatrix* Matroid::matrix() const {
  const auto* l = std::get_if<Linear>(repr_.get());
  return l ? &l->h : nullptr;
}

std::string Matroid::describe() const {
  std::ostringstream out;
  std::visit(overloaded{[&](const Linear& l) {
                          out << "linear over GF(" << l.h.modulus() << "), " << l.h.rows()
                              << "x" << l.h.cols();
                        },
                        [&](const Circuits& c) { out << c.list.size() << " circuits"; },
                        [&](const Uniform& u) { out << "U(" << u.r << "," << n_ << ")"; },
                        [&](const Dual& d) { out << "dual of [" << d.of->describe() << "]"; }},
             *repr_);
  out << "; n=" << n_ << " rank=" << full_rank_ << " corank=" << corank();
  return out.str();
}

std::vector<std::uint8_t> rank_table(const Matroid& m) {
  if (m.size() > 24) throw CapExceeded("rank table needs n <= 24");
  const std::uint64_t count = std::uint64_t{1} << m.size();
  std::vector<std::uint8_t> table(count);
  for (std::uint64_t b = 0; b < count; ++b) {
    table[b] = static_cast<std::uint8_t>(m.rank(SubsetMask(b)));
  }
  return table;
}

AxiomReport validate_rank_function(int n, const RankFunction& rank,
                                   const AxiomCheckOptions& options) {
  check_ground_size(n);
  AxiomReport report;
  report.n = n;
  auto flag = [&](const char* axiom, SubsetMask x, SubsetMask y) {
    if (report.violations.size() < options.max_violations) {
      report.violations.push_back({axiom, x, y});
    }
  };
  const SubsetMask ground = SubsetMask::full(n);

  auto check_single = [&](SubsetMask x, int rx) {
    if (rx < 0 || rx > x.size()) flag("R1", x, x);
    for (int e = 1; e <= n; ++e) {
      if (x.contains(e)) continue;
      const int ry = rank(x.with(e));
      if (ry < rx) flag("R2", x, x.with(e));
      if (ry < rx || ry > rx + 1) flag("unit-increase", x, x.with(e));
    }
  };
  auto check_pair = [&](SubsetMask x, SubsetMask y, int rx, int ry, int ri, int ru) {
    ++report.checked_pairs;
    if (ri + ru > rx + ry) flag("R3", x, y);
    const int nx = x.size() - rx;
    const int ny = y.size() - ry;
    const int ni = (x & y).size() - ri;
    const int nu = (x | y).size() - ru;
    if (ni + nu < nx + ny) flag("nullity-supermodular", x, y);
  };

  if (n <= options.exhaustive_max_n) {
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<int> table(count);
    for (std::uint64_t b = 0; b < count; ++b) table[b] = rank(SubsetMask(b));
    for (std::uint64_t b = 0; b < count; ++b) check_single(SubsetMask(b), table[b]);
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = a; b < count; ++b) {
        check_pair(SubsetMask(a), SubsetMask(b), table[a], table[b], table[a & b], table[a | b]);
      }
    }
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const SubsetMask x(rng() & ground.bits());
    const SubsetMask y(rng() & ground.bits());
    const int rx = rank(x);
    const int ry = rank(y);
    if (rx < 0 || rx > x.size()) flag("R1", x, x);
    if (ry < 0 || ry > y.size()) flag("R1", y, y);
    if (s % 64 == 0) check_single(x, rx);
    check_pair(x, y, rx, ry, rank(x & y), rank(x | y));
  }
  return report;
}

AxiomReport validate_axioms(const Matroid& m, const AxiomCheckOptions& options) {
  return validate_rank_function(m.size(), [&](SubsetMask x) { return m.rank(x); }, options);
}

}  // namespace mgw
