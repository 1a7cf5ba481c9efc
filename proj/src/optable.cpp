#include "proxring/optable.hpp"

namespace proxring {

namespace {

std::vector<ElementIndex> grid_table(const SpacePtr& space, const std::string& name,
                                     bool add_rule) {
    const std::size_t n = space->size();
    for (std::size_t i = 0; i < n; ++i)
        if (!space->element(i).coords)
            raise(ErrorCode::not_a_grid,
                  "element '" + space->element(i).label + "' has no grid coordinates");

    std::vector<ElementIndex> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        auto [i, j] = *space->element(a).coords;
        for (std::size_t b = 0; b < n; ++b) {
            auto [k, l] = *space->element(b).coords;
            int ti = add_rule ? (i + k) % 2 : std::min(i, k);
            int tj = add_rule ? (j + l) % 2 : std::min(j, l);
            auto target = space->find_coords(ti, tj);
            if (!target)
                raise(ErrorCode::closure,
                      "rule '" + name + "' maps (" + space->element(a).label + ", " +
                          space->element(b).label + ") to missing pixel (" +
                          std::to_string(ti) + "," + std::to_string(tj) + ")");
            table[a * n + b] = *target;
        }
    }
    return table;
}

}  // namespace

OpTablePtr OpTable::make(SpacePtr space, std::string name,
                         std::vector<ElementIndex> table) {
    auto op = std::shared_ptr<OpTable>(new OpTable());
    op->space_ = std::move(space);
    op->name_ = std::move(name);
    op->table_ = std::move(table);
    return op;
}

OpTablePtr OpTable::from_rows(SpacePtr space, std::string name,
                              std::vector<ElementIndex> rows) {
    const std::size_t n = space->size();
    if (rows.size() != n * n)
        raise(ErrorCode::incomplete_table,
              "table '" + name + "' has " + std::to_string(rows.size()) +
                  " entries, expected " + std::to_string(n * n));
    for (auto v : rows)
        if (v >= n)
            raise(ErrorCode::unknown_element,
                  "table '" + name + "' maps to element index out of range");
    return make(std::move(space), std::move(name), std::move(rows));
}

OpTablePtr OpTable::grid_add_mod2(SpacePtr space, std::string name) {
    auto table = grid_table(space, name, true);
    return make(std::move(space), std::move(name), std::move(table));
}

OpTablePtr OpTable::grid_mul_min(SpacePtr space, std::string name) {
    auto table = grid_table(space, name, false);
    return make(std::move(space), std::move(name), std::move(table));
}

}  // namespace proxring
