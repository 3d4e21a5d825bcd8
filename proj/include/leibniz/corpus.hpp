#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/cyclic.hpp"
#include "leibniz/io.hpp"

namespace leibniz {

/// A2, r2, H3, sl2, C2, C3a, C3b.
const std::vector<std::string>& fixture_names();

/// Throws BadSpec for an unknown name.
template <ExactField F>
Algebra<F> fixture(const std::string& name, const F& field);
AnyAlgebra fixture(const std::string& name, const FieldDescriptor& field);

struct CorpusEntry {
    std::string name;
    /// fixture | cyclic | sum | quotient | random-cyclic
    std::string origin;
    AnyAlgebra algebra;
    /// For cyclic members: {"n": n, "alphas": [...]} with alphas as scalar strings.
    json cyclic = nullptr;
};

struct CorpusLimits {
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    std::size_t max_cyclic_n = 5;
    std::vector<std::string> fixture_fields{"q", "gf2", "gf3", "gf4", "gf5", "gf9"};
    std::vector<std::string> sweep_fields{"gf2", "gf3"};
    std::vector<std::string> sum_fields{"q", "gf2", "gf3"};
    bool quotients = true;
    /// Seeded random cyclic specs over Q (n = 2..4, small integer alphas).
    std::size_t random_rational = 12;
};

/// Every cyclic spec over a finite field with 2 ≤ n ≤ max_n, alphas in code order
/// (α₂ slowest).
std::vector<CyclicSpec<GaloisField>> cyclic_sweep(const GaloisField& field, std::size_t max_n);

/// Fixtures over every fixture field, full cyclic sweeps, direct sums of unordered fixture
/// pairs (including a fixture with itself), then quotients of every finite member by each
/// nonzero proper ideal, deduplicated by (field, dim, table). Deterministic given the limits.
std::vector<CorpusEntry> generate_corpus(const CorpusLimits& limits = {});

} // namespace leibniz
