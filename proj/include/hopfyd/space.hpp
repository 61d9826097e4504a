/// @file space.hpp
/// @brief Finite-dimensional vector spaces with a distinguished ordered basis.
///
/// All higher structures (elements, structure maps, Hopf data) refer to spaces
/// through shared pointers; compatibility between tensor legs is checked by
/// dimension, since every computation is performed in coordinates relative to
/// the distinguished basis.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfyd {

/// Thrown when tensor legs / dimensions do not line up.
struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A finite-dimensional space with an ordered basis of labelled vectors.
struct Space {
    std::string name;                      ///< display name, e.g. "kC3" or "kC3^"
    std::vector<std::string> basisLabels;  ///< one label per basis vector

    Space(std::string n, std::vector<std::string> labels)
        : name(std::move(n)), basisLabels(std::move(labels)) {}

    int dim() const { return static_cast<int>(basisLabels.size()); }

    /// Space with anonymous basis e0..e{n-1}.
    static std::shared_ptr<const Space> make(const std::string& name, int n) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        return std::make_shared<const Space>(name, std::move(labels));
    }

    static std::shared_ptr<const Space> make(const std::string& name,
                                             std::vector<std::string> labels) {
        return std::make_shared<const Space>(name, std::move(labels));
    }
};

using SpacePtr = std::shared_ptr<const Space>;

/// Ground field viewed as the empty tensor product (zero legs).
using LegList = std::vector<SpacePtr>;

inline int totalDim(const LegList& legs) {
    int d = 1;
    for (const auto& s : legs) d *= s->dim();
    return d;
}

inline void requireSameShape(const LegList& a, const LegList& b, const std::string& where) {
    if (a.size() != b.size())
        throw ShapeMismatch(where + ": leg count " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i]->dim() != b[i]->dim())
            throw ShapeMismatch(where + ": leg " + std::to_string(i) + " dimension " +
                                std::to_string(a[i]->dim()) + " vs " +
                                std::to_string(b[i]->dim()));
}

}  // namespace hopfyd
