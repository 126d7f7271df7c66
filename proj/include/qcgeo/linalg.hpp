#pragma once

#include "qcgeo/tensor.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qcgeo {

/// Coordinates over the generators of a linear map or subspace.
using Combination = std::map<int, Rational>;

/// Incremental row echelon form over a key-indexed sparse space. Every stored
/// row remembers which combination of inserted vectors produced it, so the
/// same structure answers rank, kernel, membership and coordinate queries.
class Echelon {
public:
    struct Reduction {
        Tensor::Terms residual;
        Combination combination;  // input = sum combination[i] * generator_i + residual
    };

    /// Inserts the next generator (index = number of previous insertions).
    /// Returns the linear relation among generators if it is dependent.
    std::optional<Combination> insert(const Tensor::Terms& v);
    /// Inserts only if independent; dependent vectors consume no generator index.
    bool insert_if_independent(const Tensor::Terms& v);

    Reduction reduce(const Tensor::Terms& v) const;
    bool contains(const Tensor::Terms& v) const { return reduce(v).residual.empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    int generator_count() const { return inserted_; }

private:
    struct Row {
        Tensor::Terms vec;      // leading key is the pivot, with coefficient 1
        Combination combo;      // row = sum combo[i] * generator_i
    };
    // Reduces `v` in place, accumulating the generator combination consumed.
    void eliminate(Tensor::Terms& v, Combination& used) const;

    std::vector<Row> rows_;
    std::map<Key, int> pivots_;
    int inserted_ = 0;
};

/// Exact spanning set of a subspace of a tensor space, reduced to a basis.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    SubspaceBasis(Signature ambient, IndexLayout layout) : ambient_(std::move(ambient)), layout_(layout) {}

    static SubspaceBasis span(Signature ambient, IndexLayout layout, const std::vector<Tensor>& spanning);

    /// Adds `t` if it is independent of the current basis; returns whether it was added.
    bool add(const Tensor& t);

    const std::vector<Tensor>& generators() const { return gens_; }
    int rank() const { return static_cast<int>(gens_.size()); }
    const Signature& ambient() const { return ambient_; }
    const IndexLayout& layout() const { return layout_; }

    bool contains(const Tensor& t) const;
    /// Coordinates of `t` in the generators, if it lies in the span.
    std::optional<std::vector<Rational>> coordinates(const Tensor& t) const;
    /// Component of `t` outside the span after elimination (zero iff member).
    Tensor residual(const Tensor& t) const;
    Tensor combine(const std::vector<Rational>& coords) const;

private:
    Signature ambient_;
    IndexLayout layout_;
    std::vector<Tensor> gens_;
    Echelon echelon_;
};

SubspaceBasis intersection(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis sum(const SubspaceBasis& a, const SubspaceBasis& b);

/// Linear operator presented by the images of a labelled domain basis.
class LinearMap {
public:
    LinearMap(Signature domain, Signature codomain, IndexLayout layout)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), layout_(layout) {}

    void add_column(Tensor domain_element, Tensor image);

    int domain_dim() const { return static_cast<int>(inputs_.size()); }
    const std::vector<Tensor>& inputs() const { return inputs_; }
    const std::vector<Tensor>& images() const { return images_; }
    const Signature& domain() const { return domain_; }
    const Signature& codomain() const { return codomain_; }
    const IndexLayout& layout() const { return layout_; }

    Tensor apply_coordinates(const Combination& x) const;
    Tensor domain_element(const Combination& x) const;

    int rank() const;
    SubspaceBasis image() const;
    /// Kernel as elements of the domain.
    SubspaceBasis kernel() const;
    /// Kernel in domain coordinates.
    std::vector<Combination> kernel_coordinates() const;
    /// Preimage of a subspace of the codomain, as a subspace of the domain.
    SubspaceBasis preimage(const SubspaceBasis& target) const;

private:
    Signature domain_;
    Signature codomain_;
    IndexLayout layout_;
    std::vector<Tensor> inputs_;
    std::vector<Tensor> images_;
};

struct AffineSolutionSet {
    Combination particular;                 // domain coordinates
    std::vector<Combination> kernel;        // domain coordinates of a kernel basis
    Tensor particular_element;              // particular as a domain tensor
    SubspaceBasis kernel_basis;             // kernel as domain tensors
};

struct Unsolvable {
    Tensor residual;  // target minus its reduction against the image
};

using SolveResult = std::variant<AffineSolutionSet, Unsolvable>;

SolveResult exact_solve(const LinearMap& map, const Tensor& target);

/// Unique decomposition of `x` along a direct sum of subspaces.
/// Throws StructuralError if the subspaces are dependent or `x` lies outside their sum.
std::vector<Tensor> project_components(const Tensor& x, const std::vector<SubspaceBasis>& parts);

/// Checks that the listed subspaces are independent; returns the rank of their sum.
int direct_sum_rank(const std::vector<SubspaceBasis>& parts, bool& independent);

/// Canonical basis of the ambient space spanned by all keys of a signature and layout.
std::vector<Key> enumerate_keys(const Signature& sig, const IndexLayout& layout);

/// Small dense rational matrix helpers used by the qc checks.
using Matrix = std::vector<std::vector<Rational>>;
Matrix identity_matrix(int size);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Rational determinant(Matrix a);
bool is_symmetric(const Matrix& a);
bool is_positive_definite(const Matrix& a);  // Sylvester criterion
bool operator_equal(const Matrix& a, const Matrix& b);
/// Some x with a x = b, if one exists.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);
/// Basis of {x : m x = 0} for a dense matrix with `cols` columns.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, int cols);

}  // namespace qcgeo
