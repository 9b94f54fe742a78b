#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tcplan/errors.hpp"

namespace tcplan::coh {

enum class Field { GF2, Rational };

/// Exact coefficient; GF2 values are normalized to 0/1.
using Coeff = boost::multiprecision::cpp_rational;

Coeff normalize_coeff(Field f, Coeff c);

struct BasisClass {
    std::string label;
    int degree = 0;
};

struct Term {
    std::size_t basis = 0;
    Coeff coeff;
};
bool operator==(const Term& a, const Term& b);
using SparseVec = std::vector<Term>;

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// Finite-dimensional graded-commutative algebra given by a basis and a
/// multiplication table of structure constants. Exactly one basis class of
/// degree 0 is required; it is the unit. Immutable after construction.
class GradedAlgebra {
public:
    /// products maps (i, j) basis-index pairs to the expansion of e_i e_j.
    /// Missing pairs without a specified transpose default to zero; missing
    /// transposes are filled in by graded commutativity. Validates all
    /// axioms (unit, graded commutativity, associativity, degree additivity),
    /// throwing InvalidPresentation naming the violated axiom and classes.
    static AlgebraPtr make(Field field, std::vector<BasisClass> basis,
                           const std::map<std::pair<std::size_t, std::size_t>, SparseVec>&
                               products);

    Field field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BasisClass>& basis() const { return basis_; }
    std::size_t unit_index() const { return unit_; }
    int top_degree() const { return top_degree_; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    const SparseVec& product(std::size_t i, std::size_t j) const {
        return table_[i * basis_.size() + j];
    }

    /// Checks all axioms; throws InvalidPresentation naming what failed.
    void validate() const;

    bool structurally_equal(const GradedAlgebra& other) const;

    // --- tensor-product bookkeeping (set when built by tensor_product) ---
    bool is_tensor() const { return !factors_.empty(); }
    const std::vector<AlgebraPtr>& tensor_factors() const { return factors_; }
    const std::vector<std::size_t>& multi_index(std::size_t basis_idx) const {
        return multi_[basis_idx];
    }
    std::size_t tensor_index(const std::vector<std::size_t>& multi) const;

private:
    friend AlgebraPtr tensor_product(const std::vector<AlgebraPtr>&, const std::string&);
    GradedAlgebra() = default;

    Field field_ = Field::GF2;
    std::vector<BasisClass> basis_;
    std::size_t unit_ = 0;
    int top_degree_ = 0;
    std::vector<SparseVec> table_;  // row-major dim x dim
    std::vector<AlgebraPtr> factors_;
    std::vector<std::vector<std::size_t>> multi_;
};

/// Element of a graded algebra: a dense coefficient vector over the basis.
class Element {
public:
    Element(AlgebraPtr alg, std::vector<Coeff> coeffs);

    static Element zero(const AlgebraPtr& alg);
    static Element unit(const AlgebraPtr& alg);
    static Element basis(const AlgebraPtr& alg, std::size_t idx);
    static Element basis(const AlgebraPtr& alg, const std::string& label);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Coeff>& coeffs() const { return c_; }
    bool is_zero() const;

    /// Degree when homogeneous (ignoring zero coefficients); nullopt for
    /// mixed degrees, 0 for the zero element.
    std::optional<int> homogeneous_degree() const;

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator*(const Element& other) const;  // algebra product
    Element scaled(const Coeff& k) const;
    bool operator==(const Element& other) const;

    std::string to_string() const;

private:
    AlgebraPtr alg_;
    std::vector<Coeff> c_;
};

/// True when elements of a and b may be combined (same object or
/// structurally identical presentations).
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Graded tensor product with Koszul signs:
/// (a1 x ... x ak)(b1 x ... x bk) = (-1)^{sum_{j<i} |a_i||b_j|} (a1 b1 x ... x ak bk).
/// Basis labels are joined with `sep`.
AlgebraPtr tensor_product(const std::vector<AlgebraPtr>& factors,
                          const std::string& sep = std::string("⊗"));

/// H*(X x X) model: two-fold tensor square.
AlgebraPtr tensor_square(const AlgebraPtr& a);

/// H*(Y^n) model: n-fold tensor power (labels joined with a cross).
/// Returns the algebra itself for n = 1.
AlgebraPtr kunneth_power(const AlgebraPtr& a, int n);

/// Element of a tensor algebra with x in slot `slot` and units elsewhere
/// (the external product 1 x ... x a x ... x 1), extended linearly.
Element slot_class(const AlgebraPtr& power, std::size_t slot, const Element& a);

/// Bilinear embedding (x, y) -> x (x) y into a two-factor tensor algebra.
Element pure_tensor(const AlgebraPtr& tensor_alg, const Element& x, const Element& y);

/// Image of u under the multiplication map a (x) b -> ab. u must live in a
/// tensor square; the result lives in the factor algebra.
Element cup(const Element& u);

/// a (x) 1 - 1 (x) a for homogeneous a (the sign collapses over GF2); lies
/// in ker(cup). `ts` must be the tensor square of a's algebra.
Element zero_divisor(const AlgebraPtr& ts, const Element& a);

/// Degree-preserving unital algebra map given by the images of the source
/// basis classes. Multiplicativity, unitality and degree preservation are
/// checked at construction.
class AlgebraMap {
public:
    AlgebraMap(AlgebraPtr source, AlgebraPtr target, std::vector<Element> images);

    static AlgebraMap identity(const AlgebraPtr& a);

    const AlgebraPtr& source() const { return src_; }
    const AlgebraPtr& target() const { return dst_; }
    const std::vector<Element>& images() const { return images_; }

    Element apply(const Element& x) const;

private:
    AlgebraMap() = default;
    friend AlgebraMap tensor_of_maps(const AlgebraMap&, const AlgebraMap&);

    AlgebraPtr src_, dst_;
    std::vector<Element> images_;
};

/// f (x) g acting on the tensor squares (no Koszul sign: both maps preserve
/// degree). Sources must share a field.
AlgebraMap tensor_of_maps(const AlgebraMap& f, const AlgebraMap& g);

}  // namespace tcplan::coh
