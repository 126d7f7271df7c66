#pragma once

// Dimensions of irreducible Sp(n)×Sp(1)-modules and the decomposition
// identities checked against them.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qcgeo {

/// V_{l₁,…,l_k} ⊗ S^s H.
struct HighestWeight {
    int n = 1;
    std::vector<int> coefficients;  // non-increasing, non-negative
    int sp1_degree = 0;
};

/// Weyl product formula for C_n, times s+1 for the S^s H factor; zero when
/// the weight has more nonzero coefficients than n. Throws std::invalid_argument
/// on a malformed weight.
std::int64_t weyl_dim(const HighestWeight& w);

/// Parses "2,1,1" (empty string for the trivial weight).
std::vector<int> parse_weight_list(const std::string& text);

struct Summand {
    std::vector<int> weight;
    int sp1_degree = 0;
    int multiplicity = 1;
};

struct IdentityResult {
    std::string id;
    int n = 1;
    std::optional<int> l;
    std::int64_t lhs = 0;
    std::vector<std::int64_t> rhs;
    bool equal = false;
};

/// A dimension identity lhs(n, l) = Σ rhs(n, l); `uses_l` entries are checked
/// for l in a range.
struct IdentitySpec {
    std::string id;
    std::string statement;
    bool uses_l = false;
    int min_l = 1;
    std::function<std::int64_t(int n, int l)> lhs;
    std::function<std::vector<Summand>(int n, int l)> rhs;
};

const std::vector<IdentitySpec>& identity_catalog();
/// Throws std::invalid_argument for an unknown id.
IdentityResult identity_check(const std::string& id, int n, std::optional<int> l = std::nullopt);
/// Every catalog entry for n, and for each l in [min_l, max_l] where a parameter appears.
std::vector<IdentityResult> check_catalog(int n, int max_l = 5);

struct LedgerRow {
    std::string module;
    std::int64_t representation_dim = 0;
    std::int64_t linear_dim = 0;
    bool equal() const { return representation_dim == linear_dim; }
};
/// Representation-theoretic dimensions next to exact ranks from the model spaces.
std::vector<LedgerRow> module_ledger(int n);

}  // namespace qcgeo
