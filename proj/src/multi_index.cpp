#include "anisoheat/multi_index.hpp"

namespace anisoheat {

namespace {

void fill_of_order(int dim, int order, std::vector<int>& cur, int axis,
                   std::vector<MultiIndex>& out) {
    if (axis == dim - 1) {
        cur[static_cast<std::size_t>(axis)] = order;
        out.emplace_back(cur);
        return;
    }
    for (int v = order; v >= 0; --v) {
        cur[static_cast<std::size_t>(axis)] = v;
        fill_of_order(dim, order - v, cur, axis + 1, out);
    }
}

}  // namespace

std::vector<MultiIndex> indices_of_order(int dim, int order) {
    if (dim < 1 || order < 0) throw std::invalid_argument("indices_of_order: bad arguments");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<std::size_t>(dim), 0);
    fill_of_order(dim, order, cur, 0, out);
    return out;
}

std::vector<MultiIndex> indices_up_to(int dim, int order) {
    std::vector<MultiIndex> out;
    for (int s = 0; s <= order; ++s) {
        auto level = indices_of_order(dim, s);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace anisoheat
