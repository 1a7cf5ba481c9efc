#pragma once

#include <memory>
#include <string>
#include <vector>

#include "proxring/space.hpp"

namespace proxring {

class OpTable;
using OpTablePtr = std::shared_ptr<const OpTable>;

/// Total binary operation on a carrier. Operations are total on the
/// ambient space X, never restricted to subsets: approximate closure
/// (AG1) is a property of subsets, not of the table.
class OpTable {
public:
    const SpacePtr& space() const { return space_; }
    const std::string& name() const { return name_; }

    ElementIndex apply(ElementIndex a, ElementIndex b) const {
        return table_[a * space_->size() + b];
    }

    const std::vector<ElementIndex>& raw() const { return table_; }

    /// Extensional table from row-major entries (row = left operand).
    static OpTablePtr from_rows(SpacePtr space, std::string name,
                                std::vector<ElementIndex> rows);

    /// x_ij + x_kl = x_nm with n = (i+k) mod 2, m = (j+l) mod 2.
    static OpTablePtr grid_add_mod2(SpacePtr space, std::string name = "add");

    /// x_ij * x_kl = x_{min(i,k), min(j,l)}.
    static OpTablePtr grid_mul_min(SpacePtr space, std::string name = "mul");

private:
    OpTable() = default;
    static OpTablePtr make(SpacePtr space, std::string name,
                           std::vector<ElementIndex> table);

    SpacePtr space_;
    std::string name_;
    std::vector<ElementIndex> table_;
};

}  // namespace proxring
