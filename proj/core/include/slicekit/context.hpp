#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slicekit/error.hpp"

namespace slicekit {

// An ordered list of variable names fixing a polynomial ring Q[x_1..x_n].
// Cheap to copy; two contexts are interchangeable iff their name lists are
// equal.  Every object built over a context carries a copy, and all binary
// operations insist the contexts agree.
class VarContext {
public:
    explicit VarContext(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
        if (names_->empty()) throw Error("variable context must name at least one variable");
        for (std::size_t i = 0; i < names_->size(); ++i) {
            for (std::size_t j = i + 1; j < names_->size(); ++j) {
                if ((*names_)[i] == (*names_)[j])
                    throw Error("duplicate variable name '" + (*names_)[i] + "'");
            }
        }
    }

    std::size_t size() const { return names_->size(); }

    const std::string& name(std::size_t i) const {
        if (i >= names_->size()) throw IndexError("variable index out of range");
        return (*names_)[i];
    }

    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return i;
        return std::nullopt;
    }

    // New context with one extra variable appended (used for the formal flow
    // parameter).  The original context is a prefix of the result.
    VarContext extended(std::string extra) const {
        std::vector<std::string> names = *names_;
        names.push_back(std::move(extra));
        return VarContext(std::move(names));
    }

    // True when `prefix` names an initial segment of this context's variables.
    bool has_prefix(const VarContext& prefix) const {
        if (prefix.size() > size()) return false;
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if ((*names_)[i] != prefix.names()[i]) return false;
        return true;
    }

    friend bool operator==(const VarContext& a, const VarContext& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const VarContext& a, const VarContext& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_context(const VarContext& a, const VarContext& b) {
    if (a != b) throw ContextMismatchError("operands live in different polynomial rings");
}

}  // namespace slicekit
