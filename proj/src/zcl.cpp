#include "tcplan/zcl.hpp"

#include <functional>

namespace tcplan::coh {

namespace {

struct SearchState {
    const std::vector<Element>* zds = nullptr;
    const std::vector<std::size_t>* owners = nullptr;  // basis index per zero-divisor
    const AlgebraPtr* base = nullptr;
    const AlgebraMap* image_map = nullptr;  // nullptr for the absolute bound
    ZclResult best;
};

/// Depth-first over nondecreasing index sequences; the first witness found
/// at a new depth is the lexicographically smallest one. Extending a product
/// whose (mapped) value is zero stays zero, so those branches are cut.
void search(SearchState& st, std::size_t start, int depth, const Element& prod,
            std::vector<std::size_t>& stack) {
    for (std::size_t i = start; i < st.zds->size(); ++i) {
        Element next = prod * (*st.zds)[i];
        Element tested = st.image_map ? st.image_map->apply(next) : next;
        if (tested.is_zero()) continue;
        stack.push_back(i);
        if (depth + 1 > st.best.length) {
            st.best.length = depth + 1;
            st.best.witness.clear();
            st.best.factors.clear();
            for (std::size_t k : stack) {
                st.best.witness.push_back((*st.base)->basis()[(*st.owners)[k]].label);
                st.best.factors.push_back((*st.zds)[k]);
            }
            st.best.product = next;
            if (st.image_map) st.best.mapped = tested;
        }
        search(st, i, depth + 1, next, stack);
        stack.pop_back();
    }
}

ZclResult run_search(const AlgebraPtr& a, const AlgebraMap* image_map) {
    AlgebraPtr ts = tensor_square(a);
    std::vector<Element> zds;
    std::vector<std::size_t> owners;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        if (i == a->unit_index()) continue;
        zds.push_back(zero_divisor(ts, Element::basis(a, i)));
        owners.push_back(i);
    }
    SearchState st{&zds, &owners, &a, image_map,
                   ZclResult{0, {}, {}, Element::unit(ts), std::nullopt}};
    std::vector<std::size_t> stack;
    search(st, 0, 0, Element::unit(ts), stack);
    return std::move(st.best);
}

}  // namespace

ZclResult zcl_lower_bound(const AlgebraPtr& a) { return run_search(a, nullptr); }

ZclResult relative_zcl_lower_bound(const AlgebraPtr& a_x, const AlgebraMap& i1,
                                   const AlgebraMap& i2) {
    if (!same_algebra(i1.source(), a_x) || !same_algebra(i2.source(), a_x))
        throw SourceMismatch("both restriction maps must have source A_X");
    const AlgebraMap both = tensor_of_maps(i1, i2);
    return run_search(a_x, &both);
}

bool graph_yn_product_check(int n, const AlgebraPtr& a_y) {
    if (n < 1) throw Error("graph check needs n >= 1");
    std::vector<std::size_t> degree_one;
    for (std::size_t i = 0; i < a_y->dim(); ++i)
        if (a_y->basis()[i].degree == 1) degree_one.push_back(i);
    if (degree_one.size() < static_cast<std::size_t>(n))
        throw DegreeAssumptionViolated("need at least n degree-1 classes, found " +
                                       std::to_string(degree_one.size()));
    degree_one.resize(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < degree_one.size(); ++i)
        for (std::size_t j = i; j < degree_one.size(); ++j)
            if (!a_y->product(degree_one[i], degree_one[j]).empty())
                throw DegreeAssumptionViolated(
                    "cycle classes must have vanishing products; (" +
                    a_y->basis()[degree_one[i]].label + ", " +
                    a_y->basis()[degree_one[j]].label + ") does not");

    AlgebraPtr power = kunneth_power(a_y, n);
    AlgebraPtr ts = tensor_square(power);
    const std::size_t un = static_cast<std::size_t>(n);
    auto gamma = [&](std::size_t slot, std::size_t cls) {
        const Element beta = Element::basis(a_y, degree_one[cls]);
        return un == 1 ? beta : slot_class(power, slot, beta);
    };
    Element prod = Element::unit(ts);
    for (std::size_t j = 0; j < un; ++j)
        prod = prod * zero_divisor(ts, gamma(j, j));
    for (std::size_t j = 0; j < un; ++j)
        prod = prod * zero_divisor(ts, gamma(j, (j + 1) % un));
    return !prod.is_zero();
}

}  // namespace tcplan::coh
