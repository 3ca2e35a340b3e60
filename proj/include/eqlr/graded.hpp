#pragma once
//
// Coordinates for tuples of homogeneous elements of A.
//
// A SlotLayout is a list of slots, each holding an element of one graded
// piece A_e (optionally restricted to a single xi-weight). Concatenating the
// monomial bases of the slots gives a Q-basis for the tuple space; all linear
// systems in the library are written in these coordinates.
//

#include "action.hpp"
#include "algebra.hpp"
#include "qlinalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace eqlr {

struct Slot {
    int degree = 0;
    std::optional<int> weight; // residue mod m; nullopt keeps every weight
};

class SlotLayout {
public:
    SlotLayout() = default;

    SlotLayout(const WeightedAlgebra& alg, const CyclicAction& act, std::vector<Slot> slots) : slots_(std::move(slots)) {
        offsets_.reserve(slots_.size());
        monomials_.reserve(slots_.size());
        index_.resize(slots_.size());
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            offsets_.push_back(dimension_);
            std::vector<Monomial> monos;
            for (const auto& m : alg.graded_basis(slots_[s].degree).monomials)
                if (!slots_[s].weight || act.weight(m) == act.residue(*slots_[s].weight))
                    monos.push_back(m);
            for (std::size_t i = 0; i < monos.size(); ++i)
                index_[s].emplace(monos[i], dimension_ + i);
            dimension_ += monos.size();
            monomials_.push_back(std::move(monos));
        }
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t slot_count() const { return slots_.size(); }
    const Slot& slot(std::size_t s) const { return slots_.at(s); }
    const std::vector<Monomial>& monomials(std::size_t s) const { return monomials_.at(s); }
    std::size_t offset(std::size_t s) const { return offsets_.at(s); }

    std::optional<std::size_t> position(std::size_t s, const Monomial& m) const {
        auto it = index_.at(s).find(m);
        if (it == index_.at(s).end())
            return std::nullopt;
        return it->second;
    }

    /// Coordinates of a tuple of reduced polynomials. Throws if a term does
    /// not belong to its slot.
    template <class Values>
    SparseVector sparse_coordinates(const Values& values) const {
        if (values.size() != slots_.size())
            throw DimensionError("SlotLayout: wrong number of slot values");
        SparseVector v;
        for (std::size_t s = 0; s < slots_.size(); ++s)
            for (const auto& [m, c] : values[s].terms()) {
                auto pos = position(s, m);
                if (!pos)
                    throw std::logic_error("SlotLayout: value has a term outside its slot");
                v.emplace(*pos, c);
            }
        return v;
    }

    template <class Values>
    Vector coordinates(const Values& values) const {
        return to_dense(sparse_coordinates(values), dimension_);
    }

    std::vector<Poly> values(const Vector& coords) const {
        if (coords.size() != dimension_)
            throw DimensionError("SlotLayout: coordinate vector has wrong length");
        std::vector<Poly> out(slots_.size());
        for (std::size_t s = 0; s < slots_.size(); ++s)
            for (std::size_t i = 0; i < monomials_[s].size(); ++i)
                out[s].add_term(monomials_[s][i], coords[offsets_[s] + i]);
        return out;
    }

private:
    std::vector<Slot> slots_;
    std::vector<std::size_t> offsets_;
    std::vector<std::vector<Monomial>> monomials_;
    std::vector<std::map<Monomial, std::size_t>> index_;
    std::size_t dimension_ = 0;
};

/// Adds the coordinates of a reduced polynomial of degree e (restricted to
/// the layout's slot) as column `col` of m, rows offset by the slot.
inline void add_column_entries(QMatrix& m, std::size_t col, const SlotLayout& rows, std::size_t slot, const Poly& p) {
    for (const auto& [mono, c] : p.terms()) {
        auto pos = rows.position(slot, mono);
        if (!pos)
            throw std::logic_error("add_column_entries: term outside row slot");
        m.add(*pos, col, c);
    }
}

} // namespace eqlr
