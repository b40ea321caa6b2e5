// Certificate checking. Uses only the poset's order relation so that it stays
// independent of the search code that produces certificates.

#include <algorithm>
#include <functional>

#include "chromsym/nice.hpp"

namespace chromsym {

std::vector<std::vector<std::string>> ChainPartitionCertificate::labeled(const Poset& poset) const {
    std::vector<std::vector<std::string>> out;
    for (const auto& block : blocks) {
        auto& row = out.emplace_back();
        for (int e : block) row.push_back(poset.label(e));
    }
    return out;
}

bool validate_certificate(const Poset& poset, const ChainPartitionCertificate& cert, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::vector<int> seen(static_cast<std::size_t>(poset.size()), 0);
    std::vector<int> sizes;
    for (const auto& block : cert.blocks) {
        if (block.empty()) return fail("empty block");
        for (int e : block) {
            if (e < 0 || e >= poset.size()) return fail("element index out of range");
            if (seen[static_cast<std::size_t>(e)]++) return fail("element " + poset.label(e) + " appears twice");
        }
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j)
                if (!poset.leq(block[i], block[j]) && !poset.leq(block[j], block[i]))
                    return fail(poset.label(block[i]) + " and " + poset.label(block[j]) + " are incomparable");
        sizes.push_back(static_cast<int>(block.size()));
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
        if (!seen[e]) return fail("element " + poset.label(static_cast<int>(e)) + " is not covered");
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    if (sizes != cert.type.parts()) return fail("block sizes do not match the claimed type");
    return true;
}

}  // namespace chromsym
