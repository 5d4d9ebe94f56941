#ifndef TRICHAIN_VARORDER_HPP
#define TRICHAIN_VARORDER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trichain {

/// Fixed ascending variable ordering x1 < ... < xn. Polynomials store
/// variable indices only; the order maps indices to names at the text
/// boundary (parser, printer, CLI).
class VarOrder {
public:
    VarOrder() = default;
    explicit VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) throw std::invalid_argument("VarOrder: empty variable list");
        for (size_t i = 0; i < names_.size(); ++i)
            for (size_t j = i + 1; j < names_.size(); ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("VarOrder: duplicate variable '" + names_[i] + "'");
    }

    size_t size() const { return names_.size(); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> index_of(const std::string& n) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return std::nullopt;
    }

    bool operator==(const VarOrder& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

} // namespace trichain

#endif
