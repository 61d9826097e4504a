#include "hopfyd/checks.hpp"

namespace hopfyd {

std::string basisLabel(const LegList& legs, const MultiIndex& idx) {
    std::string s;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += "⊗";
        s += legs[i]->basisLabels[idx[i]];
    }
    return s.empty() ? "1" : s;
}

CheckResult checkMapEqual(const std::string& id, const StructureMap& lhs,
                          const StructureMap& rhs) {
    requireSameShape(lhs.dom(), rhs.dom(), "checkMapEqual (dom)");
    requireSameShape(lhs.cod(), rhs.cod(), "checkMapEqual (cod)");
    for (const auto& idx : allIndices(lhs.dom())) {
        auto a = lhs.column(idx), b = rhs.column(idx);
        if (a != b) {
            return CheckResult::fail(id, "input " + basisLabel(lhs.dom(), idx) +
                                             ": lhs = " + a.str() + ", rhs = " + b.str());
        }
    }
    return CheckResult::ok(id);
}

}  // namespace hopfyd
